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

#ifndef ANSEC_ASYMPTOTICS_HPP
#define ANSEC_ASYMPTOTICS_HPP

#include "ansec/system_config.hpp"

namespace ansec
{
    /// Antenna ratios and power budget of the large-system limit.
    ///
    ///   beta1 = N_A/N_E, beta2 = N_A/N_B, beta3 = N_B/N_E, rho = beta1 - beta3 = (N_A-N_B)/N_E
    struct AsymptoticRatios
    {
        double beta1 = 0.0;
        double beta2 = 0.0;
        double beta3 = 0.0;
        double p_u = 0.0;
        double p_v = 0.0;
        double gamma = 0.0;

        double rho() const { return beta1 - beta3; }
        /// Per-stream loading P_u / (gamma beta3) of the information part.
        double signal_load() const { return p_u / (gamma * beta3); }
        /// Per-stream loading P_v / (gamma rho) of the artificial-noise part.
        double noise_load() const { return p_v / (gamma * rho()); }

        /// Throws DomainError unless beta1 = beta2 beta3 (1e-12 rel), beta2 > 1,
        /// rho > 0, gamma > 0 and both powers are finite and nonnegative.
        void validate() const;

        /// Finite-size substitution of the ratios and P_u, P_v from a configuration.
        static AsymptoticRatios from_config(const SystemConfig &cfg);
    };

    struct DeltaSolution
    {
        double delta = 0.0;
        double residual = 0.0;
        int iterations = 0;
    };

    /// F(x, y) = (sqrt(x(1+sqrt y)^2 + 1) - sqrt(x(1-sqrt y)^2 + 1))^2.
    double f_func(double x, double y);

    /// Large-system capacity per receive dimension of a y-aspect Gaussian channel at SNR x.
    /// phi_func(0, y) = 0.
    double phi_func(double x, double y);

    /// eta-transform of the two-level loading profile at d.
    double eta_of_delta(double d, const AsymptoticRatios &r);

    /// Shannon-type companion of eta_of_delta: sum of weighted ln(1 + d * load).
    double v_of_delta(double d, const AsymptoticRatios &r);

    /// Root of beta1 (1 - eta(d)) = 1 - d on (0, 1] by bisection over [1e-15, 1].
    /// Throws NoRootError without a sign change and DomainError when both powers vanish.
    DeltaSolution solve_delta(const AsymptoticRatios &r);

    /// Explicit root for the equal-loading case signal_load() == noise_load():
    ///   d = 1 - F(load, beta1) / (4 load).
    /// Used only as a cross-check of solve_delta.
    double delta_equal_loading(const AsymptoticRatios &r);

    /// Almost-sure limit Psi of R_S / N_B.
    double psi(const AsymptoticRatios &r);

    /// N_B * Psi with the finite-size substitution; approximates average_secrecy_rate.
    double asymptotic_average_rate(const SystemConfig &cfg);

    /// High-SNR bound Delta(x) on R_S / N_B; Delta(A_max) is the lower and
    /// Delta(A_min) the upper bound. Decreasing in x.
    double delta_highsnr(double x, const AsymptoticRatios &r);

    struct LoadRange
    {
        double a_min = 0.0;
        double a_max = 0.0;
    };

    /// (min, max) of {P_v/(gamma rho), P_u/(gamma beta3)}.
    LoadRange a_min_max(const AsymptoticRatios &r);

    struct PositivityConditions
    {
        bool sufficient = false;   // Delta(A_max) > 0
        bool necessary = false;    // Delta(A_min) > 0
        bool advisory = false;     // outside min{ag, abg} >= 4, min{N_A, N_B, N_A-N_B, N_E} > 2
        double delta_amax = 0.0;
        double delta_amin = 0.0;
    };

    /// Sufficient and necessary conditions for a positive secrecy rate.
    PositivityConditions positivity_conditions(const SystemConfig &cfg);

    /// True when the SNR part of the validity guard holds: min{alpha gamma, alpha beta gamma} >= 4.
    bool high_snr_guard(double alpha, double beta, double gamma);

    inline constexpr int kCriticalEveCutoff = 4096;

    struct CriticalEveAntennas
    {
        int sufficient = 0; // smallest N_E from which Delta(A_max) <= 0 for all larger N_E
        int necessary = 0;  // smallest N_E from which Delta(A_min) <= 0 for all larger N_E
    };

    /// Eve antenna counts at which the sufficient and necessary conditions stop holding.
    /// Scans N_E = 1..cutoff; throws DomainError when a condition still holds at the cutoff.
    CriticalEveAntennas critical_eve_antennas(const DesignParameters &params, int cutoff = kCriticalEveCutoff);
}

#endif
