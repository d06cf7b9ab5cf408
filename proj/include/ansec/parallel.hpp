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

#ifndef ANSEC_PARALLEL_HPP
#define ANSEC_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>

namespace ansec
{
    /// Name of the environment variable that sets the worker count.
    inline constexpr const char *kThreadsEnv = "ANSEC_THREADS";

    /// Trials per work unit. Fixed so that reduction order never depends on the worker count.
    inline constexpr std::uint64_t kChunkTrials = 1024;

    /// Worker count from ANSEC_THREADS, else hardware concurrency (at least 1).
    unsigned default_threads();

    /// Runs body(chunk) for chunk in [0, n_chunks) on up to `threads` workers.
    /// After the first failure no new chunks are started; the exception from the
    /// lowest-numbered failing chunk is rethrown, so errors are schedule independent
    /// as long as chunks below it complete, which they do.
    void parallel_chunks(std::uint64_t n_chunks, unsigned threads, const std::function<void(std::uint64_t)> &body);

    /// Streaming mean/variance (Welford), mergeable in a fixed order.
    struct RunningStats
    {
        std::uint64_t count = 0;
        double mean = 0.0;
        double m2 = 0.0;

        void push(double x)
        {
            ++count;
            const double d = x - mean;
            mean += d / static_cast<double>(count);
            m2 += d * (x - mean);
        }

        void merge(const RunningStats &o);
        double sample_variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
    };
}

#endif
