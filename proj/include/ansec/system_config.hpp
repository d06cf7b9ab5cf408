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

#ifndef ANSEC_SYSTEM_CONFIG_HPP
#define ANSEC_SYSTEM_CONFIG_HPP

#include <string>

namespace ansec
{
    /// Antenna counts and the (alpha, beta, gamma) power parameters, all linear.
    ///
    ///   alpha  Eve's SNR, sigma_u^2 / sigma_E^2
    ///   beta   artificial-noise power ratio, sigma_v^2 / sigma_u^2
    ///   gamma  Eve-to-Bob noise power ratio, sigma_E^2 / sigma_B^2
    ///
    /// Bob's noise power is normalised to one, so Bob's SNR is alpha * gamma.
    /// alpha = 0 is accepted as the degenerate no-signal case.
    struct SystemConfig
    {
        int n_a = 0;
        int n_b = 0;
        int n_e = 0;
        double alpha = 0.0;
        double beta = 0.0;
        double gamma = 0.0;

        /// Throws DomainError unless 1 <= n_b < n_a, n_e >= 1, alpha >= 0, beta, gamma > 0.
        void validate() const;

        double snr_bob() const { return alpha * gamma; }
        /// Total information power P_u = alpha gamma N_B.
        double p_u() const { return alpha * gamma * n_b; }
        /// Total artificial-noise power P_v = alpha beta gamma (N_A - N_B).
        double p_v() const { return alpha * beta * gamma * (n_a - n_b); }

        int null_dim() const { return n_a - n_b; }
        int n_min() const;
        int n_max() const;
        int n_hat_min() const;
        int n_hat_max() const;

        std::string describe() const;
    };

    /// A SystemConfig without Eve's antenna count, as used for design queries.
    struct DesignParameters
    {
        int n_a = 0;
        int n_b = 0;
        double alpha = 0.0;
        double beta = 0.0;
        double gamma = 0.0;

        SystemConfig with_eve(int n_e) const { return {n_a, n_b, n_e, alpha, beta, gamma}; }
    };

    /// The two-atom spectrum of diag(1/theta_i): mu1 > mu2 with multiplicities m1 + m2 = N_A.
    struct WishartSpectrum
    {
        double mu1 = 0.0;
        double mu2 = 0.0;
        int m1 = 0;
        int m2 = 0;
    };

    /// Power ratio conversion, linear = 10^(dB/10).
    double db_to_linear(double db);
    double linear_to_db(double linear);

    /// Natural-log rates to bits.
    inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
}

#endif
