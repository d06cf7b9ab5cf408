// SPDX-License-Identifier: Apache-2.0
//
// ansec: secrecy-rate analysis for artificial-noise MIMO wiretap channels
// Copyright (C) 2026 The ansec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ANSEC_RANDOM_HPP
#define ANSEC_RANDOM_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace ansec
{
    /// Philox4x32-10 block function (Salmon et al., SC'11).
    /// Stateless: output depends only on (counter, key).
    inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key)
    {
        constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
        constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round)
        {
            const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
            key[0] += W0;
            key[1] += W1;
        }
        return ctr;
    }

    /// Complex Gaussian stream for one trial. The 128-bit counter is (trial, block),
    /// the key is the seed, so any trial can be regenerated without the others.
    class TrialStream
    {
    public:
        TrialStream(std::uint64_t seed, std::uint64_t trial)
            : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
              trial_(trial)
        {
        }

        /// Draw from CN(0, 1): E|z|^2 = 1, real and imaginary parts each of variance 1/2.
        std::complex<double> complex_normal()
        {
            const auto w = philox4x32({static_cast<std::uint32_t>(trial_), static_cast<std::uint32_t>(trial_ >> 32),
                                       static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)},
                                      key_);
            ++block_;
            // Two 53-bit uniforms; u1 in (0, 1] keeps the log finite.
            const std::uint64_t a = (static_cast<std::uint64_t>(w[0]) << 32 | w[1]) >> 11;
            const std::uint64_t b = (static_cast<std::uint64_t>(w[2]) << 32 | w[3]) >> 11;
            constexpr double scale = 1.0 / 9007199254740992.0;
            const double u1 = (static_cast<double>(a) + 1.0) * scale;
            const double u2 = static_cast<double>(b) * scale;
            // Box-Muller with the 1/sqrt(2) per-component scaling folded in.
            const double r = std::sqrt(-std::log(u1));
            const double t = 6.283185307179586476925286766559 * u2;
            return {r * std::cos(t), r * std::sin(t)};
        }

        std::uint64_t blocks_used() const { return block_; }

    private:
        std::array<std::uint32_t, 2> key_;
        std::uint64_t trial_;
        std::uint64_t block_ = 0;
    };
}

#endif
