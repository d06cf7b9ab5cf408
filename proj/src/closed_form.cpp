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

#include "ansec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ansec/detail/gamma_kernels.hpp"
#include "ansec/detail/multiprecision.hpp"
#include "ansec/errors.hpp"

namespace ansec
{
    namespace
    {
        template <class Real>
        double theta_kernel(int m, int n, double x_in)
        {
            using std::pow;
            const Real x = x_in;
            const Real b = 1 / x;
            const int depth = n + m - 2;
            const auto s = detail::scaled_upper_gamma_sequence(b, depth, detail::kMpRecurrenceLimit);

            // prefix[t] = sum_{j<=t} x^{-j} e^{b} Gamma(-j, b)
            std::vector<Real> prefix(s.size());
            Real x_pow = 1;
            Real acc = 0;
            for (std::size_t j = 0; j < s.size(); ++j)
            {
                acc += x_pow * s[j];
                prefix[j] = acc;
                x_pow *= b;
            }

            const auto fact = detail::factorial_table<Real>(2 * n);
            auto choose = [&](int top, int bottom) { return fact[top] / (fact[bottom] * fact[top - bottom]); };
            std::vector<Real> pow2(2 * m + 1);
            pow2[0] = 1;
            for (std::size_t e = 1; e < pow2.size(); ++e)
                pow2[e] = pow2[e - 1] * 2;

            const int d = n - m;
            Real total = 0;
            for (int k = 0; k < m; ++k)
            {
                for (int l = 0; l <= k; ++l)
                {
                    const Real outer = fact[2 * l] * choose(2 * (k - l), k - l) / (fact[l] * fact[d + l]);
                    for (int i = 0; i <= 2 * l; ++i)
                    {
                        Real term = outer * fact[d + i] * choose(2 * (l + d), 2 * l - i) /
                                    (pow2[2 * k - i] * fact[i]) * prefix[d + i];
                        if (i % 2 == 1)
                            term = -term;
                        total += term;
                    }
                }
            }
            return static_cast<double>(total);
        }

        double theta_digits(int n, double x)
        {
            return 30.0 + 2.0 * n + detail::gamma_guard_digits(1.0 / x);
        }

        // Two-eigenvalue determinant expansion of E[ln det(I + G Delta G^H)] for
        // G ~ N_E x N_A, with Delta^{-1} = diag(mu1 x m1, mu2 x m2).
        template <class Real>
        double chiani_kernel(int n_a, int n_e, const WishartSpectrum &sp)
        {
            using std::pow;
            const Real mu[2] = {Real(sp.mu1), Real(sp.mu2)};
            const int mult[2] = {sp.m1, sp.m2};
            const int nh = std::min(n_e, n_a);
            const int max_phi = n_e - 1 + std::max(sp.m1, sp.m2) - 1;

            const std::vector<Real> seq[2] = {
                detail::scaled_upper_gamma_sequence(mu[0], max_phi, detail::kMpRecurrenceLimit),
                detail::scaled_upper_gamma_sequence(mu[1], max_phi, detail::kMpRecurrenceLimit)};
            const auto fact = detail::factorial_table<Real>(std::max(n_a, max_phi) + 1);

            auto gamma_product = [&](int k, int n) {
                Real p = 1;
                for (int i = 1; i <= k; ++i)
                    p *= fact[n - i];
                return p;
            };

            Real k_const = pow(mu[0], Real(sp.m1 * n_e)) * pow(mu[1], Real(sp.m2 * n_e)) /
                           (gamma_product(nh, n_e) * gamma_product(sp.m1, sp.m1) * gamma_product(sp.m2, sp.m2) *
                            pow(mu[0] - mu[1], Real(sp.m1 * sp.m2)));
            if ((n_e * (n_a - nh)) % 2 != 0)
                k_const = -k_const;

            // Row i (1-based) belongs to eigenvalue group e_i with derivative order d_i.
            struct RowInfo
            {
                int group;
                int d;
            };
            std::vector<RowInfo> rows(n_a);
            for (int i = 1; i <= n_a; ++i)
            {
                const int group = i <= mult[0] ? 0 : 1;
                const int cumulative = group == 0 ? mult[0] : mult[0] + mult[1];
                rows[i - 1] = {group, cumulative - i};
            }

            // Columns j <= nh, j != k: (-1)^d phi! / mu^{phi+1}
            // Column j == k:           (-1)^d phi! sum_l e^mu Gamma(l - phi, mu) / mu^{l+1}
            // Columns j > nh:          mu^{N_A-j-d} (N_A-j)! / (N_A-j-d)!
            std::vector<Real> plain(static_cast<std::size_t>(n_a) * n_a);
            std::vector<Real> special(static_cast<std::size_t>(n_a) * n_a);
            for (int i = 1; i <= n_a; ++i)
            {
                const auto [group, d] = rows[i - 1];
                const Real &m = mu[group];
                const Real sign = d % 2 == 0 ? Real(1) : Real(-1);
                for (int j = 1; j <= n_a; ++j)
                {
                    const std::size_t idx = static_cast<std::size_t>(i - 1) * n_a + (j - 1);
                    if (j > nh)
                    {
                        const int e = n_a - j - d;
                        plain[idx] = e < 0 ? Real(0) : pow(m, Real(e)) * fact[n_a - j] / fact[e];
                        continue;
                    }
                    const int phi = n_e - nh + j - 1 + d;
                    plain[idx] = sign * fact[phi] / pow(m, Real(phi + 1));
                    Real acc = 0;
                    Real inv_pow = 1 / m;
                    for (int l = 0; l <= phi; ++l)
                    {
                        acc += seq[group][phi - l] * inv_pow;
                        inv_pow /= m;
                    }
                    special[idx] = sign * fact[phi] * acc;
                }
            }

            Real total = 0;
            std::vector<Real> r;
            for (int k = 1; k <= nh; ++k)
            {
                r = plain;
                for (int i = 0; i < n_a; ++i)
                    r[static_cast<std::size_t>(i) * n_a + (k - 1)] = special[static_cast<std::size_t>(i) * n_a + (k - 1)];
                total += detail::lu_determinant(r, n_a);
            }
            return static_cast<double>(k_const * total);
        }

        double chiani_digits(int n_a, int n_e, const WishartSpectrum &sp)
        {
            const double gap = std::log10(sp.mu1 / (sp.mu1 - sp.mu2));
            const double spread = std::abs(std::log10(sp.mu1 / sp.mu2));
            return 30.0 + 2.0 * (n_a + n_e) + sp.m1 * sp.m2 * gap + n_e * spread +
                   detail::gamma_guard_digits(std::max(sp.mu1, sp.mu2));
        }

        void check_envelope(const SystemConfig &cfg)
        {
            if (cfg.n_hat_max() > kMaxExactAntennas)
                throw DomainError("exact formulas support at most " + std::to_string(kMaxExactAntennas) +
                                  " antennas per terminal: " + cfg.describe());
        }
    }

    double theta(int m, int n, double x)
    {
        if (m < 1 || n < m)
            throw DomainError("theta requires n >= m >= 1, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
        if (n > kMaxExactAntennas)
            throw DomainError("theta supports n <= " + std::to_string(kMaxExactAntennas) + ", got n=" +
                              std::to_string(n));
        if (!(x >= 0.0) || !std::isfinite(x))
            throw DomainError("theta requires a finite x >= 0, got " + std::to_string(x));
        if (x == 0.0)
            return 0.0;
        return detail::with_precision(theta_digits(n, x),
                                      [&](auto tag) { return theta_kernel<decltype(tag)>(m, n, x); });
    }

    WishartSpectrum build_spectrum(const SystemConfig &cfg)
    {
        cfg.validate();
        if (!(cfg.alpha > 0.0))
            throw DomainError("spectrum needs alpha > 0: " + cfg.describe());
        if (cfg.beta == 1.0)
            throw DomainError("beta = 1 gives a single eigenvalue; use the equal-power branch: " + cfg.describe());
        const double signal = 1.0 / cfg.alpha;
        const double noise = 1.0 / (cfg.alpha * cfg.beta);
        if (signal > noise)
            return {signal, noise, cfg.n_b, cfg.n_a - cfg.n_b};
        return {noise, signal, cfg.n_a - cfg.n_b, cfg.n_b};
    }

    double omega(const SystemConfig &cfg)
    {
        cfg.validate();
        check_envelope(cfg);
        if (cfg.alpha == 0.0)
            return 0.0;
        if (std::abs(cfg.beta - 1.0) < kDegenerateBetaTolerance)
            return theta(cfg.n_hat_min(), cfg.n_hat_max(), cfg.alpha);
        const WishartSpectrum sp = build_spectrum(cfg);
        const double value = detail::with_precision(chiani_digits(cfg.n_a, cfg.n_e, sp), [&](auto tag) {
            return chiani_kernel<decltype(tag)>(cfg.n_a, cfg.n_e, sp);
        });
        if (!std::isfinite(value))
            throw NumericError("non-finite Omega for " + cfg.describe());
        return value;
    }

    namespace
    {
        // theta(N_B, N_A, alpha gamma) + theta(N_min, N_max, alpha beta)
        double information_terms(const SystemConfig &cfg)
        {
            return theta(cfg.n_b, cfg.n_a, cfg.alpha * cfg.gamma) +
                   theta(cfg.n_min(), cfg.n_max(), cfg.alpha * cfg.beta);
        }
    }

    double average_secrecy_rate(const SystemConfig &cfg)
    {
        cfg.validate();
        check_envelope(cfg);
        return information_terms(cfg) - omega(cfg);
    }

    RateBounds average_rate_bounds(const SystemConfig &cfg)
    {
        cfg.validate();
        check_envelope(cfg);
        const double base = information_terms(cfg);
        const double theta_min = std::min(cfg.alpha, cfg.alpha * cfg.beta);
        const double theta_max = std::max(cfg.alpha, cfg.alpha * cfg.beta);
        RateBounds out;
        out.lower = base - theta(cfg.n_hat_min(), cfg.n_hat_max(), theta_max);
        out.upper = base - theta(cfg.n_hat_min(), cfg.n_hat_max(), theta_min);
        return out;
    }

    double bob_capacity(const SystemConfig &cfg)
    {
        cfg.validate();
        return theta(cfg.n_b, cfg.n_a, cfg.alpha * cfg.gamma);
    }

    double eve_leakage_upper_bound(const SystemConfig &cfg)
    {
        cfg.validate();
        check_envelope(cfg);
        const double jensen = cfg.n_e * std::log1p(cfg.alpha * cfg.n_b);
        const double ab = cfg.alpha * cfg.beta;
        return jensen + theta(cfg.n_min(), cfg.n_max(), ab / (1.0 + cfg.alpha * cfg.n_b)) -
               theta(cfg.n_min(), cfg.n_max(), ab);
    }

    RateReport rate_report(const SystemConfig &cfg)
    {
        RateReport out;
        out.exact = average_secrecy_rate(cfg);
        const RateBounds b = average_rate_bounds(cfg);
        out.lower = b.lower;
        out.upper = b.upper;
        out.bob_capacity = bob_capacity(cfg);
        return out;
    }
}
