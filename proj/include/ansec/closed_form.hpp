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

#ifndef ANSEC_CLOSED_FORM_HPP
#define ANSEC_CLOSED_FORM_HPP

#include "ansec/system_config.hpp"

namespace ansec
{
    /// Largest antenna count (n_hat_max) the exact formulas are validated for.
    inline constexpr int kMaxExactAntennas = 16;

    /// |beta - 1| below which Omega uses the equal-power (Wishart) branch.
    inline constexpr double kDegenerateBetaTolerance = 1e-6;

    /// Exact rates of one configuration, in nats.
    struct RateReport
    {
        double exact = 0.0;
        double lower = 0.0;
        double upper = 0.0;
        double bob_capacity = 0.0;
    };

    /// E[ln det(I_m + x W)] for W ~ W_m(n, I), in nats.
    ///
    /// Finite quadruple sum over x^{-j} e^{1/x} Gamma(-j, 1/x). The prefactor is
    /// e^{+1/x}; for m = n = 1 the sum reduces to e^{1/x} E1(1/x), which is the
    /// known closed form of E[ln(1 + x|g|^2)]. The alternating sum is evaluated
    /// in multiprecision. theta(m, n, 0) = 0.
    /// Throws DomainError unless 1 <= m <= n <= 16 and x >= 0.
    double theta(int m, int n, double x);

    /// Spectrum of diag(1/theta_i): {1/alpha x N_B, 1/(alpha beta) x (N_A - N_B)}, sorted so mu1 > mu2.
    /// Throws DomainError when beta == 1 (single eigenvalue) or alpha <= 0.
    WishartSpectrum build_spectrum(const SystemConfig &cfg);

    /// Omega = E[ln det(I_{N_E} + alpha W1 + alpha beta W2)].
    ///
    /// Equal-power case reduces to theta(n_hat_min, n_hat_max, alpha); otherwise
    /// the two-eigenvalue determinant expansion K sum_k det(R^(k)) is evaluated
    /// in multiprecision with a working precision derived from the spectrum
    /// gap. |beta - 1| < 1e-6 is routed to the equal-power branch.
    double omega(const SystemConfig &cfg);

    /// Average secrecy rate theta(N_B, N_A, alpha gamma) + theta(N_min, N_max, alpha beta) - Omega.
    /// Unclamped: negative when Eve's channel dominates.
    double average_secrecy_rate(const SystemConfig &cfg);

    struct RateBounds
    {
        double lower = 0.0;
        double upper = 0.0;
    };

    /// Bounds on the average secrecy rate obtained by replacing Omega with
    /// theta(n_hat_min, n_hat_max, max/min{alpha, alpha beta}). Equal for beta = 1.
    RateBounds average_rate_bounds(const SystemConfig &cfg);

    /// Bob's ergodic capacity theta(N_B, N_A, alpha gamma).
    double bob_capacity(const SystemConfig &cfg);

    /// Upper bound on the leakage I(u; y | H, G):
    ///   N_E ln(1 + alpha N_B) + theta(N_min, N_max, alpha beta / (1 + alpha N_B)) - theta(N_min, N_max, alpha beta).
    double eve_leakage_upper_bound(const SystemConfig &cfg);

    /// All of the above in one pass.
    RateReport rate_report(const SystemConfig &cfg);
}

#endif
