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

#ifndef ANSEC_MONTE_CARLO_HPP
#define ANSEC_MONTE_CARLO_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ansec/system_config.hpp"

namespace ansec
{
    using ComplexMatrix = Eigen::MatrixXcd;

    /// One draw of (H, G) plus the precoding basis V = [V1, Z] from the SVD of H.
    struct ChannelRealization
    {
        ComplexMatrix h;  // N_B x N_A
        ComplexMatrix g;  // N_E x N_A
        ComplexMatrix v1; // N_A x N_B
        ComplexMatrix z;  // N_A x (N_A - N_B), H Z = 0
    };

    struct MCEstimate
    {
        double mean = 0.0;   // nats
        double std_error = 0.0; // sample stddev / sqrt(trials)
        std::uint64_t trials = 0;
        std::uint64_t seed = 0;
        bool clamped = false;
    };

    /// Rank threshold relative to the largest singular value of H.
    inline constexpr double kRankTolerance = 1e-8;

    /// Builds V1 and Z from H. Throws NumericError if H is rank deficient.
    void attach_precoder(ChannelRealization &ch);

    /// Draws trial `trial_index` of the stream keyed by `seed`.
    ChannelRealization sample_channel(const SystemConfig &cfg, std::uint64_t trial_index, std::uint64_t seed);

    /// ln det(I + A) for Hermitian positive semidefinite A, via Cholesky.
    double log_det_identity_plus(const ComplexMatrix &a);

    /// Same, factorising in place; only the lower triangle of m is read.
    double log_det_identity_plus_inplace(ComplexMatrix &m);

    /// ln det(I + a g g^H), using the smaller Gram matrix.
    double log_det_gram(const ComplexMatrix &g, double a);

    /// R_S = ln|I + alpha gamma H H^H| - ln|I + alpha W1 + alpha beta W2| + ln|I + alpha beta W2|,
    /// W1 = G V1 (G V1)^H, W2 = G Z (G Z)^H. Nats, unclamped.
    double instantaneous_secrecy_rate(const ChannelRealization &ch, const SystemConfig &cfg);

    /// Mean of per-trial R_S. clamp applies max(0, R_S) per trial.
    /// Results are bitwise identical for any thread count.
    MCEstimate mc_average_secrecy_rate(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed, bool clamp);
    MCEstimate mc_average_secrecy_rate(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed, bool clamp,
                                       unsigned threads);

    /// E ln det(I_rows + G diag(profile) G^H), G rows x cols standard complex Gaussian.
    MCEstimate mc_logdet_oracle(int rows, int cols, const std::vector<double> &profile, std::uint64_t trials,
                                std::uint64_t seed);
    MCEstimate mc_logdet_oracle(int rows, int cols, const std::vector<double> &profile, std::uint64_t trials,
                                std::uint64_t seed, unsigned threads);

    /// Per-realization R_S / N_B, realization i drawn as trial i.
    std::vector<double> mc_normalized_rate_sample(const SystemConfig &cfg, std::uint64_t realizations,
                                                  std::uint64_t seed);
    std::vector<double> mc_normalized_rate_sample(const SystemConfig &cfg, std::uint64_t realizations,
                                                  std::uint64_t seed, unsigned threads);
}

#endif
