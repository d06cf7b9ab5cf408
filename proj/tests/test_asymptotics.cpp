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

#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "ansec/asymptotics.hpp"
#include "ansec/closed_form.hpp"
#include "ansec/errors.hpp"
#include "ansec/monte_carlo.hpp"

// Covered tests:
// - F and Phi identities, zero-SNR limits, high-SNR limit
// - Phi against a large-matrix Monte Carlo log-det
// - eta and V monotonicity
// - delta bisection residual, beta = 1 closed form
// - Psi reduction at beta = 1, finite-size agreement with the exact rate
// - High-SNR Delta thresholds for the three-antenna design example
// - Positivity conditions and critical antenna counts

static const double kA3 = std::pow(10.0, 0.3);
static const double kB1 = std::pow(10.0, 0.1);

static ansec::SystemConfig example3(int n_e)
{
    return {6, 3, n_e, kA3, kB1, kA3};
}

static double rel_err(double x, double ref)
{
    return std::abs(x - ref) / std::abs(ref);
}

TEST_CASE("Asymptotics - F function")
{
    CHECK(ansec::f_func(0.0, 2.0) == 0.0);
    for (double x : {1e-6, 0.1, 1.0, 7.0, 1e4})
    {
        // sqrt(4x + 1) - 1 without the cancellation
        const double r = 4.0 * x / (std::sqrt(4.0 * x + 1.0) + 1.0);
        CHECK(rel_err(ansec::f_func(x, 1.0), r * r) < 1e-12);
    }
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j)
        {
            const double x = std::pow(10.0, -2.0 + 5.0 * i / 19.0);
            const double y = std::pow(10.0, -1.5 + 3.0 * j / 19.0);
            INFO("x = " << x << ", y = " << y);
            CHECK(rel_err(ansec::f_func(x, y), ansec::f_func(x * y, 1.0 / y)) < 1e-10);
        }
    CHECK_THROWS_AS(ansec::f_func(-1.0, 1.0), ansec::DomainError);
    CHECK_THROWS_AS(ansec::f_func(1.0, 0.0), ansec::DomainError);
}

TEST_CASE("Asymptotics - Phi scaling identity and limits")
{
    CHECK(ansec::phi_func(0.0, 2.0) == 0.0);
    CHECK(std::abs(ansec::phi_func(1e-12, 2.0)) < 1e-11);

    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j)
        {
            const double x = std::pow(10.0, -2.0 + 5.0 * i / 19.0);
            const double y = std::pow(10.0, -1.5 + 3.0 * j / 19.0);
            INFO("x = " << x << ", y = " << y);
            CHECK(rel_err(ansec::phi_func(x, y), y * ansec::phi_func(x * y, 1.0 / y)) < 1e-10);
        }

    // ln x - Phi(x, y)/y -> (1 - y)/y ln(1 - y) + 1
    const double x = 1e6;
    for (double y : {0.25, 0.5})
    {
        const double limit = (1.0 - y) / y * std::log1p(-y) + 1.0;
        INFO("y = " << y);
        CHECK(std::abs(std::log(x) - ansec::phi_func(x, y) / y - limit) < 1e-3);
    }

    // At y = 1 the approach is 2/sqrt(x), slower than at y < 1
    for (double big : {1e4, 1e6, 1e8, 1e10})
    {
        const double gap = 1.0 - (std::log(big) - ansec::phi_func(big, 1.0));
        INFO("x = " << big);
        CHECK(std::abs(gap * std::sqrt(big) - 2.0) < 0.02);
    }
}

TEST_CASE("Asymptotics - Phi vs large-matrix Monte Carlo")
{
    // (1/128) E ln det(I_64 + (4/128) G G^H), G 64 x 128, tends to Phi(4, 0.5).
    // Dividing by 64 instead gives Phi(2, 2) = 2 Phi(4, 0.5).
    const auto e = ansec::mc_logdet_oracle(64, 128, std::vector<double>(128, 4.0 / 128.0), 50, 3);
    const double phi = ansec::phi_func(4.0, 0.5);
    INFO("mc = " << e.mean / 128.0 << ", phi = " << phi);
    CHECK(rel_err(e.mean / 128.0, phi) < 0.01);
    CHECK(rel_err(e.mean / 64.0, ansec::phi_func(2.0, 2.0)) < 0.01);
}

TEST_CASE("Asymptotics - eta and V")
{
    const auto r = ansec::AsymptoticRatios::from_config({6, 3, 4, 2.0, 0.5, 2.0});
    CHECK(std::abs(ansec::eta_of_delta(1e-15, r) - 1.0) < 1e-12);
    CHECK(ansec::v_of_delta(0.0, r) == 0.0);
    double prev_eta = 2.0, prev_v = -1.0;
    for (int i = 1; i <= 100; ++i)
    {
        const double d = i / 100.0;
        const double eta = ansec::eta_of_delta(d, r);
        const double v = ansec::v_of_delta(d, r);
        CHECK(eta < prev_eta);
        CHECK(v > prev_v);
        prev_eta = eta;
        prev_v = v;
    }

    ansec::AsymptoticRatios zero = r;
    zero.p_u = zero.p_v = 0.0;
    CHECK(ansec::eta_of_delta(0.3, zero) == 1.0);
    CHECK(ansec::v_of_delta(0.3, zero) == 0.0);
}

TEST_CASE("Asymptotics - delta bisection")
{
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i)
    {
        ansec::AsymptoticRatios r;
        r.beta2 = 1.0 + 9.0 * u(rng) + 1e-3;
        r.beta3 = 0.05 * std::pow(200.0, u(rng));
        r.beta1 = r.beta2 * r.beta3;
        r.p_u = std::pow(10.0, -2.0 + 5.0 * u(rng));
        r.p_v = std::pow(10.0, -2.0 + 5.0 * u(rng));
        r.gamma = std::pow(10.0, -1.0 + 2.0 * u(rng));
        const auto sol = ansec::solve_delta(r);
        INFO("beta1 = " << r.beta1 << ", beta2 = " << r.beta2 << ", p_u = " << r.p_u << ", p_v = " << r.p_v);
        CHECK(sol.delta > 0.0);
        CHECK(sol.delta <= 1.0);
        const double g = r.beta1 * (1.0 - ansec::eta_of_delta(sol.delta, r)) - (1.0 - sol.delta);
        CHECK(std::abs(g) == sol.residual);
        CHECK(sol.residual <= 1e-12);
    }

    // Equal loading: bisection and the explicit expression agree
    ansec::AsymptoticRatios eq{2.0, 2.0, 1.0, 3.0, 3.0, 1.0};
    CHECK(std::abs(ansec::solve_delta(eq).delta - ansec::delta_equal_loading(eq)) < 1e-10);
    for (int n_e : {1, 2, 4, 6, 9, 16, 40})
        for (double alpha : {0.1, 1.0, 10.0, 1000.0})
        {
            const auto r = ansec::AsymptoticRatios::from_config({6, 3, n_e, alpha, 1.0, 2.0});
            INFO("n_e = " << n_e << ", alpha = " << alpha);
            CHECK(std::abs(ansec::solve_delta(r).delta - ansec::delta_equal_loading(r)) < 1e-10);
        }

    ansec::AsymptoticRatios none = eq;
    none.p_u = none.p_v = 0.0;
    CHECK_THROWS_AS(ansec::solve_delta(none), ansec::DomainError);
}

TEST_CASE("Asymptotics - Psi")
{
    // beta = 1 reduction
    const auto r = ansec::AsymptoticRatios::from_config({6, 3, 4, 2.0, 1.0, 2.0});
    const double a = r.signal_load();
    const double reduced = ansec::phi_func(r.p_u, r.beta2) - ansec::phi_func(a, r.beta1) / r.beta3 +
                           ansec::phi_func(a, r.beta1 - r.beta3) / r.beta3;
    CHECK(std::abs(ansec::psi(r) - reduced) < 1e-10);

    // Finite-size agreement with the exact rate
    const ansec::SystemConfig c{6, 3, 4, 2.0, 0.5, 2.0};
    CHECK(rel_err(ansec::asymptotic_average_rate(c), ansec::average_secrecy_rate(c)) < 0.02);

    // Vanishing signal power leaves the Phi(P_u, beta2) term at zero
    ansec::AsymptoticRatios s = ansec::AsymptoticRatios::from_config(c);
    s.p_u = 1e-14;
    CHECK(std::abs(ansec::phi_func(s.p_u, s.beta2)) < 1e-13);
    CHECK(std::isfinite(ansec::psi(s)));

    // Deviation shrinks as all antenna counts grow with fixed ratios
    double prev = 1.0;
    for (int k : {1, 2, 4})
    {
        const ansec::SystemConfig big{4 * k, 2 * k, 3 * k, 2.0, 0.5, 2.0};
        const double dev = rel_err(ansec::asymptotic_average_rate(big), ansec::average_secrecy_rate(big));
        INFO("scale " << k << ": " << dev);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("Asymptotics - Tracks the exact rate in the gamma and N_E grids")
{
    for (int n_e : {2, 4, 6, 8})
        for (int g_db = -10; g_db <= 10; g_db += 2)
        {
            const ansec::SystemConfig c{6, 3, n_e, kA3, std::pow(10.0, -0.3), std::pow(10.0, g_db / 10.0)};
            const double exact = ansec::average_secrecy_rate(c);
            const double asym = ansec::asymptotic_average_rate(c);
            INFO(c.describe());
            CHECK(std::abs(asym - exact) < 0.05 * std::max(1.0, std::abs(exact)));
        }
}

TEST_CASE("Asymptotics - High-SNR Delta thresholds")
{
    for (int n_e = 1; n_e <= 30; ++n_e)
    {
        const auto r = ansec::AsymptoticRatios::from_config(example3(n_e));
        const auto l = ansec::a_min_max(r);
        const double dmax = ansec::delta_highsnr(l.a_max, r);
        const double dmin = ansec::delta_highsnr(l.a_min, r);
        INFO("n_e = " << n_e);
        CHECK(dmax <= dmin);
        CHECK((dmax > 0.0) == (n_e <= 11));
        if (n_e >= 16)
            CHECK(dmin < 0.0);
        else
            CHECK(dmin > 0.0);
    }

    // Equal loads at beta = 1
    const auto r = ansec::AsymptoticRatios::from_config({6, 3, 5, 2.0, 1.0, 2.0});
    const auto l = ansec::a_min_max(r);
    CHECK(l.a_min == l.a_max);
    CHECK(ansec::delta_highsnr(l.a_min, r) == ansec::delta_highsnr(l.a_max, r));

    // beta1 = 1 and rho = 1 take the continuous branch
    const auto edge = ansec::AsymptoticRatios::from_config({6, 3, 6, 2.0, 2.0, 2.0});
    CHECK(edge.beta1 == 1.0);
    CHECK(std::isfinite(ansec::delta_highsnr(3.0, edge)));
    const auto rho1 = ansec::AsymptoticRatios::from_config({6, 3, 3, 2.0, 2.0, 2.0});
    CHECK(rho1.rho() == 1.0);
    CHECK(std::isfinite(ansec::delta_highsnr(3.0, rho1)));

    // Zero noise power has no logarithm
    ansec::AsymptoticRatios bad = rho1;
    bad.p_v = 0.0;
    CHECK_THROWS_AS(ansec::delta_highsnr(3.0, bad), ansec::DomainError);
    CHECK(ansec::a_min_max(bad).a_min == 0.0);
}

TEST_CASE("Asymptotics - Positivity conditions")
{
    const auto p10 = ansec::positivity_conditions(example3(10));
    CHECK(p10.sufficient);
    CHECK(p10.necessary);
    const auto p14 = ansec::positivity_conditions(example3(14));
    CHECK_FALSE(p14.sufficient);
    CHECK(p14.necessary);
    const auto p20 = ansec::positivity_conditions(example3(20));
    CHECK_FALSE(p20.sufficient);
    CHECK_FALSE(p20.necessary);

    // alpha gamma = 3.98 < 4 puts the example outside the high-SNR guard
    CHECK(p10.advisory);
    CHECK_FALSE(ansec::positivity_conditions({8, 4, 4, 4.0, 2.0, 1.0}).advisory);
    CHECK(ansec::positivity_conditions({8, 4, 2, 4.0, 2.0, 1.0}).advisory);

    // Sufficient implies necessary
    for (int n_e = 1; n_e <= 24; ++n_e)
        for (double beta : {0.3, 1.0, 3.0})
        {
            const auto p = ansec::positivity_conditions({8, 3, n_e, 4.0, beta, 2.0});
            CHECK((!p.sufficient || p.necessary));
        }
}

TEST_CASE("Asymptotics - Critical Eve antennas")
{
    const ansec::DesignParameters d{6, 3, kA3, kB1, kA3};
    const auto c = ansec::critical_eve_antennas(d);
    CHECK(c.sufficient == 12);
    CHECK(c.necessary == 16);

    const auto eq = ansec::critical_eve_antennas({6, 3, kA3, 1.0, kA3});
    CHECK(eq.sufficient == eq.necessary);

    // More power never lowers the thresholds
    ansec::DesignParameters p = d;
    auto prev = c;
    for (int i = 0; i < 6; ++i)
    {
        p.alpha *= 2.0;
        const auto next = ansec::critical_eve_antennas(p);
        CHECK(next.sufficient >= prev.sufficient);
        CHECK(next.necessary >= prev.necessary);
        prev = next;
    }

    CHECK_THROWS_AS(ansec::critical_eve_antennas(d, 10), ansec::DomainError);
}

TEST_CASE("Asymptotics - High-SNR sandwich at desk scale")
{
    const ansec::SystemConfig c{64, 32, 32, 100.0, 2.0, 100.0};
    const auto r = ansec::AsymptoticRatios::from_config(c);
    const auto l = ansec::a_min_max(r);
    const auto sample = ansec::mc_normalized_rate_sample(c, 40, 9);
    double mean = 0.0;
    for (double v : sample)
        mean += v;
    mean /= static_cast<double>(sample.size());
    const double lo = ansec::delta_highsnr(l.a_max, r);
    const double hi = ansec::delta_highsnr(l.a_min, r);
    INFO("mean = " << mean << ", bounds = [" << lo << ", " << hi << "]");
    CHECK(mean >= lo - 0.1);
    CHECK(mean <= hi + 0.1);
}
