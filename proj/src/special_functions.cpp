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

#include "ansec/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "ansec/detail/gamma_kernels.hpp"
#include "ansec/detail/multiprecision.hpp"
#include "ansec/errors.hpp"

namespace ansec
{
    namespace
    {
        constexpr double kLogDoubleMax = 709.782712893384;

        constexpr std::array<std::uint64_t, 21> kFactorials = [] {
            std::array<std::uint64_t, 21> f{};
            f[0] = 1;
            for (std::size_t k = 1; k < f.size(); ++k)
                f[k] = f[k - 1] * k;
            return f;
        }();

        void check_argument(double b)
        {
            if (!(b > 0.0) || !std::isfinite(b))
                throw DomainError("incomplete gamma requires a finite argument b > 0, got " + std::to_string(b));
        }

        void check_order(int a)
        {
            if (a < -kMaxNegativeGammaOrder)
                throw DomainError("incomplete gamma order " + std::to_string(a) + " below supported minimum -" +
                                  std::to_string(kMaxNegativeGammaOrder));
        }

        // ln Gamma(a, b) for a >= 1 via log-sum-exp over the finite sum.
        double log_upper_gamma_positive(int a, double b)
        {
            const double log_b = std::log(b);
            double peak = -std::numeric_limits<double>::infinity();
            for (int k = 0; k < a; ++k)
                peak = std::max(peak, k * log_b - log_factorial(k));
            CompensatedSum acc;
            for (int k = 0; k < a; ++k)
                acc.add(std::exp(k * log_b - log_factorial(k) - peak));
            return log_factorial(a - 1) - b + peak + std::log(acc.value());
        }
    }

    void CompensatedSum::add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double exp_integral_e1(double b)
    {
        if (!(b > 0.0))
            throw DomainError("E1 requires b > 0, got " + std::to_string(b));
        if (b <= 1.0)
            return detail::e1_series(b);
        return std::exp(-b) * detail::upper_gamma_cf_core(0.0, b);
    }

    double upper_incomplete_gamma(int a, double b)
    {
        check_argument(b);
        check_order(a);
        double value = 0.0;
        if (a >= 1)
        {
            if (a <= 170 && b <= 700.0)
            {
                double term = 1.0;
                CompensatedSum acc;
                acc.add(term);
                for (int k = 1; k < a; ++k)
                {
                    term *= b / k;
                    acc.add(term);
                }
                const double fact = a <= 21 ? static_cast<double>(kFactorials[a - 1]) : std::exp(log_factorial(a - 1));
                value = std::exp(-b) * fact * acc.value();
            }
            if (!(value > 0.0) || !std::isfinite(value))
            {
                const double lg = log_upper_gamma_positive(a, b);
                if (lg > kLogDoubleMax)
                    throw RangeError("Gamma(" + std::to_string(a) + ", " + std::to_string(b) +
                                     ") overflows double precision");
                value = std::exp(lg);
            }
        }
        else
        {
            const auto s = detail::scaled_upper_gamma_sequence(b, -a, 1.0);
            value = s.back() * std::exp(-b);
        }
        if (!(value > 0.0) || !std::isfinite(value))
            throw RangeError("Gamma(" + std::to_string(a) + ", " + std::to_string(b) +
                             ") is outside double range; use the log-scaled variant");
        return value;
    }

    GammaValue upper_incomplete_gamma_log(int a, double b)
    {
        check_argument(b);
        check_order(a);
        GammaValue out;
        if (a >= 1)
        {
            out.log_magnitude = log_upper_gamma_positive(a, b);
        }
        else
        {
            // MPFR's exponent range covers b^a for every supported order.
            out.log_magnitude = detail::with_precision(30.0 + detail::gamma_guard_digits(b), [&](auto tag) {
                using Real = decltype(tag);
                using std::log;
                const auto s = detail::scaled_upper_gamma_sequence(Real(b), -a, detail::kMpRecurrenceLimit);
                return static_cast<double>(log(s.back())) - b;
            });
        }
        out.sign = 1;
        out.value = std::exp(out.log_magnitude);
        return out;
    }

    double log_factorial(int n)
    {
        if (n < 0)
            throw DomainError("log_factorial requires n >= 0, got " + std::to_string(n));
        if (n < static_cast<int>(kFactorials.size()))
            return std::log(static_cast<double>(kFactorials[n]));
        return std::lgamma(static_cast<double>(n) + 1.0);
    }

    double binomial(int a, int b)
    {
        if (a < 0)
            throw DomainError("binomial requires a >= 0, got " + std::to_string(a));
        if (b < 0 || b > a)
            return 0.0;
        b = std::min(b, a - b);
        if (a <= 62)
        {
            unsigned __int128 c = 1;
            for (int i = 0; i < b; ++i)
                c = c * static_cast<unsigned>(a - i) / static_cast<unsigned>(i + 1);
            return static_cast<double>(c);
        }
        return std::exp(log_factorial(a) - log_factorial(b) - log_factorial(a - b));
    }

    double log_gamma_product(int k, int n)
    {
        if (k < 1 || n < k)
            throw DomainError("Gamma_k(n) requires n >= k >= 1, got k=" + std::to_string(k) +
                              ", n=" + std::to_string(n));
        CompensatedSum acc;
        for (int i = 1; i <= k; ++i)
            acc.add(log_factorial(n - i));
        return acc.value();
    }
}
