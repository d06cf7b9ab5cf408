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

#include "ansec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ansec/errors.hpp"

namespace ansec
{
    namespace
    {
        constexpr double kDeltaLowerBracket = 1e-15;
        constexpr int kMaxBisections = 200;

        // (1 - y)/y ln(1 - y) for 0 < y <= 1, continuous at y = 1.
        double edge_term(double y)
        {
            if (y >= 1.0)
                return 0.0;
            return (1.0 - y) / y * std::log1p(-y);
        }

        // (y - 1) ln(1 - 1/y) for y > 1.
        double tail_term(double y)
        {
            return (y - 1.0) * std::log1p(-1.0 / y);
        }

        double checked_log(double v, const char *what)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw DomainError(std::string("logarithm of non-positive ") + what);
            return std::log(v);
        }

        // Residual of the fixed-point equation; increasing in d.
        double fixed_point_gap(double d, const AsymptoticRatios &r)
        {
            const double eta = eta_of_delta(d, r);
            if (!std::isfinite(eta))
                throw DomainError("eta(delta) is not finite");
            return r.beta1 * (1.0 - eta) - (1.0 - d);
        }
    }

    void AsymptoticRatios::validate() const
    {
        auto finite = [](double v) { return std::isfinite(v); };
        if (!finite(beta1) || !finite(beta2) || !finite(beta3) || !finite(p_u) || !finite(p_v) || !finite(gamma))
            throw DomainError("asymptotic ratios must be finite");
        if (!(beta3 > 0.0))
            throw DomainError("beta3 must be positive");
        if (!(beta2 > 1.0))
            throw DomainError("beta2 = N_A/N_B must exceed 1");
        if (std::abs(beta1 - beta2 * beta3) > 1e-12 * std::abs(beta1))
            throw DomainError("ratios must satisfy beta1 = beta2 * beta3");
        if (!(rho() > 0.0))
            throw DomainError("rho = beta1 - beta3 must be positive");
        if (!(gamma > 0.0))
            throw DomainError("gamma must be positive");
        if (p_u < 0.0 || p_v < 0.0)
            throw DomainError("powers must be nonnegative");
    }

    AsymptoticRatios AsymptoticRatios::from_config(const SystemConfig &cfg)
    {
        cfg.validate();
        AsymptoticRatios r;
        r.beta1 = static_cast<double>(cfg.n_a) / cfg.n_e;
        r.beta2 = static_cast<double>(cfg.n_a) / cfg.n_b;
        r.beta3 = static_cast<double>(cfg.n_b) / cfg.n_e;
        r.p_u = cfg.p_u();
        r.p_v = cfg.p_v();
        r.gamma = cfg.gamma;
        return r;
    }

    double f_func(double x, double y)
    {
        if (!(x >= 0.0) || !(y > 0.0))
            throw DomainError("F(x, y) requires x >= 0 and y > 0");
        const double sy = std::sqrt(y);
        const double hi = std::sqrt(x * (1.0 + sy) * (1.0 + sy) + 1.0);
        const double lo = std::sqrt(x * (1.0 - sy) * (1.0 - sy) + 1.0);
        // hi - lo = (hi^2 - lo^2)/(hi + lo) = 4 x sqrt(y) / (hi + lo)
        const double diff = 4.0 * x * sy / (hi + lo);
        return diff * diff;
    }

    double phi_func(double x, double y)
    {
        if (!(x >= 0.0) || !(y > 0.0))
            throw DomainError("Phi(x, y) requires x >= 0 and y > 0");
        if (x == 0.0)
            return 0.0;
        const double f = f_func(x, y);
        const double sy = std::sqrt(y);
        const double hi = std::sqrt(x * (1.0 + sy) * (1.0 + sy) + 1.0);
        const double lo = std::sqrt(x * (1.0 - sy) * (1.0 - sy) + 1.0);
        // F / (4x) without the 0/0 at small x.
        const double f_over_4x = 4.0 * x * y / ((hi + lo) * (hi + lo));
        return y * std::log1p(x - f / 4.0) - f_over_4x + std::log1p(x * y - f / 4.0);
    }

    double eta_of_delta(double d, const AsymptoticRatios &r)
    {
        const double w = 1.0 / r.beta2;
        return w / (1.0 + d * r.signal_load()) + (1.0 - w) / (1.0 + d * r.noise_load());
    }

    double v_of_delta(double d, const AsymptoticRatios &r)
    {
        const double w = 1.0 / r.beta2;
        return w * std::log1p(d * r.signal_load()) + (1.0 - w) * std::log1p(d * r.noise_load());
    }

    DeltaSolution solve_delta(const AsymptoticRatios &r)
    {
        r.validate();
        if (!(r.p_u > 0.0) && !(r.p_v > 0.0))
            throw DomainError("delta is undefined when both powers vanish");

        double lo = kDeltaLowerBracket;
        double hi = 1.0;
        double g_lo = fixed_point_gap(lo, r);
        double g_hi = fixed_point_gap(hi, r);
        if (!(g_lo < 0.0) || !(g_hi > 0.0))
            throw NoRootError("no sign change of the delta equation on [1e-15, 1]");

        DeltaSolution sol;
        while (sol.iterations < kMaxBisections)
        {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            ++sol.iterations;
            const double g = fixed_point_gap(mid, r);
            if (g == 0.0)
            {
                lo = hi = mid;
                g_lo = g_hi = 0.0;
                break;
            }
            if (g < 0.0)
            {
                lo = mid;
                g_lo = g;
            }
            else
            {
                hi = mid;
                g_hi = g;
            }
        }
        if (std::abs(g_lo) <= std::abs(g_hi))
        {
            sol.delta = lo;
            sol.residual = std::abs(g_lo);
        }
        else
        {
            sol.delta = hi;
            sol.residual = std::abs(g_hi);
        }
        return sol;
    }

    double delta_equal_loading(const AsymptoticRatios &r)
    {
        r.validate();
        const double load = r.signal_load();
        if (!(load > 0.0) || std::abs(load - r.noise_load()) > 1e-9 * load)
            throw DomainError("explicit delta needs equal positive signal and noise loading");
        return 1.0 - f_func(load, r.beta1) / (4.0 * load);
    }

    double psi(const AsymptoticRatios &r)
    {
        r.validate();
        if (r.p_u == 0.0 && r.p_v == 0.0)
            return 0.0;
        const DeltaSolution sol = solve_delta(r);
        const double d = sol.delta;
        const double eve_total = r.beta1 * v_of_delta(d, r) - std::log(d) + d - 1.0;
        return phi_func(r.p_u, r.beta2) - eve_total / r.beta3 + phi_func(r.noise_load(), r.rho()) / r.beta3;
    }

    double asymptotic_average_rate(const SystemConfig &cfg)
    {
        return cfg.n_b * psi(AsymptoticRatios::from_config(cfg));
    }

    double delta_highsnr(double x, const AsymptoticRatios &r)
    {
        r.validate();
        if (!(x > 0.0))
            throw DomainError("Delta(x) requires x > 0");
        const double b1 = r.beta1;
        const double b2 = r.beta2;
        const double b3 = r.beta3;
        const double rho = r.rho();

        const double bob = checked_log(r.p_u * b2, "P_u") - tail_term(b2) - 1.0;

        double eve_total = 0.0;
        if (b1 <= 1.0)
            eve_total = b2 * (checked_log(x, "load") - edge_term(b1) - 1.0);
        else
            eve_total = (checked_log(x * b1, "load") - tail_term(b1) - 1.0) / b3;

        double eve_noise = 0.0;
        if (rho <= 1.0)
            eve_noise = (b2 - 1.0) * (checked_log(r.p_v / (r.gamma * rho), "P_v") - edge_term(rho) - 1.0);
        else
            eve_noise = (checked_log(r.p_v / r.gamma, "P_v") - tail_term(rho) - 1.0) / b3;

        return bob - eve_total + eve_noise;
    }

    LoadRange a_min_max(const AsymptoticRatios &r)
    {
        const double noise = r.noise_load();
        const double signal = r.signal_load();
        return {std::min(noise, signal), std::max(noise, signal)};
    }

    bool high_snr_guard(double alpha, double beta, double gamma)
    {
        return std::min(alpha * gamma, alpha * beta * gamma) >= 4.0;
    }

    PositivityConditions positivity_conditions(const SystemConfig &cfg)
    {
        const AsymptoticRatios r = AsymptoticRatios::from_config(cfg);
        const LoadRange loads = a_min_max(r);
        PositivityConditions out;
        out.delta_amax = delta_highsnr(loads.a_max, r);
        out.delta_amin = delta_highsnr(loads.a_min, r);
        out.sufficient = out.delta_amax > 0.0;
        out.necessary = out.delta_amin > 0.0;
        const int smallest = std::min({cfg.n_a, cfg.n_b, cfg.n_a - cfg.n_b, cfg.n_e});
        out.advisory = !(high_snr_guard(cfg.alpha, cfg.beta, cfg.gamma) && smallest > 2);
        return out;
    }

    CriticalEveAntennas critical_eve_antennas(const DesignParameters &params, int cutoff)
    {
        if (cutoff < 1)
            throw DomainError("cutoff must be positive");
        int last_sufficient = 0;
        int last_necessary = 0;
        for (int n_e = 1; n_e <= cutoff; ++n_e)
        {
            const AsymptoticRatios r = AsymptoticRatios::from_config(params.with_eve(n_e));
            const LoadRange loads = a_min_max(r);
            if (delta_highsnr(loads.a_max, r) > 0.0)
                last_sufficient = n_e;
            if (delta_highsnr(loads.a_min, r) > 0.0)
                last_necessary = n_e;
        }
        if (last_necessary == cutoff || last_sufficient == cutoff)
            throw DomainError("positivity condition still holds at N_E = " + std::to_string(cutoff));
        return {last_sufficient + 1, last_necessary + 1};
    }
}
