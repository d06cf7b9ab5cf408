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

#ifndef ANSEC_SPECIAL_FUNCTIONS_HPP
#define ANSEC_SPECIAL_FUNCTIONS_HPP

#include <cstdint>
#include <optional>

namespace ansec
{
    /// Maximum |a| accepted for non-positive orders of the incomplete gamma function.
    inline constexpr int kMaxNegativeGammaOrder = 64;

    /// Gamma(a, b) together with a log-scaled representation.
    ///
    /// `value` is +inf when the result overflows a double; `log_magnitude`
    /// and `sign` stay valid in that case.
    struct GammaValue
    {
        double value = 0.0;
        double log_magnitude = 0.0;
        int sign = 1;
    };

    /// Exponential integral E1(b) for b > 0.
    ///
    /// Power series for b <= 1, Legendre continued fraction above. Relative
    /// accuracy is better than 1e-13 on both branches. Throws DomainError for
    /// b <= 0.
    double exp_integral_e1(double b);

    /// Upper incomplete gamma Gamma(a, b) = int_b^inf t^{a-1} e^{-t} dt for integer a.
    ///
    /// a >= 1 uses the finite sum (a-1)! e^{-b} sum_{k<a} b^k/k!. a <= 0 uses the
    /// downward recurrence from E1(b) when b <= 1 and the continued fraction
    /// otherwise. Throws DomainError for b <= 0 or a < -64 and RangeError when
    /// the result does not fit a double (see upper_incomplete_gamma_log).
    double upper_incomplete_gamma(int a, double b);

    /// Gamma(a, b) with a log-scaled fallback for results outside double range.
    GammaValue upper_incomplete_gamma_log(int a, double b);

    /// ln(n!). Table lookup up to n = 20, log-gamma beyond.
    double log_factorial(int n);

    /// Binomial coefficient C(a, b); zero when b < 0 or b > a.
    /// Exact integer arithmetic for a <= 62, log-factorials beyond.
    double binomial(int a, int b);

    /// ln Gamma_k(n) = sum_{i=1}^k ln((n-i)!). Requires n >= k >= 1.
    double log_gamma_product(int k, int n);

    /// Neumaier-compensated running sum.
    class CompensatedSum
    {
    public:
        void add(double x) noexcept;
        double value() const noexcept { return sum_ + comp_; }

    private:
        double sum_ = 0.0;
        double comp_ = 0.0;
    };
}

#endif
