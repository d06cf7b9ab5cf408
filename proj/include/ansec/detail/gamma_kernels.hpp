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

// Precision-generic kernels for E1 and the upper incomplete gamma function.
// Real is either double or a Boost.Multiprecision float; all elementary
// functions are found through ADL.

#ifndef ANSEC_DETAIL_GAMMA_KERNELS_HPP
#define ANSEC_DETAIL_GAMMA_KERNELS_HPP

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "ansec/errors.hpp"

namespace ansec::detail
{
    // Power series  E1(b) = -gamma - ln b - sum_{k>=1} (-b)^k / (k k!).
    // Alternating: loses about b*log10(e) digits, so only used for small b
    // (or with guard digits in multiprecision).
    template <class Real>
    Real e1_series(const Real &b)
    {
        using std::abs;
        using std::log;
        const Real eps = std::numeric_limits<Real>::epsilon();
        Real term = -b; // (-b)^k / k!
        Real sum = term;
        for (int k = 2; k < 100000; ++k)
        {
            term *= -b / Real(k);
            const Real inc = term / Real(k);
            sum += inc;
            if (abs(inc) <= eps * abs(sum))
                break;
        }
        return -boost::math::constants::euler<Real>() - log(b) - sum;
    }

    // Modified Lentz evaluation of the Legendre continued fraction for
    // e^b b^{-a} Gamma(a, b). Converges for every real a once b is away from 0;
    // callers use it for b > 1.
    template <class Real>
    Real upper_gamma_cf_core(const Real &a, const Real &b)
    {
        using std::abs;
        const Real eps = std::numeric_limits<Real>::epsilon();
        const Real tiny = std::numeric_limits<Real>::min() / eps;
        Real bb = b + 1 - a;
        Real c = 1 / tiny;
        Real d = 1 / bb;
        Real h = d;
        for (long i = 1; i < 10000000L; ++i)
        {
            const Real an = -Real(i) * (Real(i) - a);
            bb += 2;
            d = an * d + bb;
            if (abs(d) < tiny)
                d = tiny;
            c = bb + an / c;
            if (abs(c) < tiny)
                c = tiny;
            d = 1 / d;
            const Real del = d * c;
            h *= del;
            if (abs(del - 1) <= eps)
                return h;
        }
        throw NumericError("incomplete gamma continued fraction did not converge");
    }

    // e^b Gamma(a, b) for a <= 0 via the continued fraction.
    template <class Real>
    Real scaled_upper_gamma_cf(int a, const Real &b)
    {
        using std::pow;
        return pow(b, Real(a)) * upper_gamma_cf_core(Real(a), b);
    }

    // S[p] = e^b Gamma(-p, b) for p = 0..depth.
    //
    // For b <= recurrence_limit the sequence is seeded with e^b E1(b) from the
    // series and continued with the downward recurrence
    //   Gamma(a, b) = (Gamma(a + 1, b) - b^a e^{-b}) / a.
    // The error in step p is amplified by roughly b / p, so the recurrence is
    // stable for b <= 1 and costs about log10(e^b) digits beyond that. Above the
    // limit each order is taken from the continued fraction.
    template <class Real>
    std::vector<Real> scaled_upper_gamma_sequence(const Real &b, int depth, double recurrence_limit)
    {
        using std::exp;
        std::vector<Real> s(static_cast<std::size_t>(depth) + 1);
        if (b <= Real(recurrence_limit))
        {
            s[0] = exp(b) * e1_series(b);
            const Real inv_b = 1 / b;
            Real b_pow = 1; // b^{-p}
            for (int p = 1; p <= depth; ++p)
            {
                b_pow *= inv_b;
                s[p] = (b_pow - s[p - 1]) / Real(p);
            }
        }
        else
        {
            for (int p = 0; p <= depth; ++p)
                s[p] = scaled_upper_gamma_cf(-p, b);
        }
        return s;
    }

    // k! for k = 0..n as Real values (exact while they fit the mantissa).
    template <class Real>
    std::vector<Real> factorial_table(int n)
    {
        std::vector<Real> f(static_cast<std::size_t>(n) + 1);
        f[0] = 1;
        for (int k = 1; k <= n; ++k)
            f[k] = f[k - 1] * Real(k);
        return f;
    }

    // Partial-pivot LU determinant of a dense n x n row-major matrix (destroys a).
    template <class Real>
    Real lu_determinant(std::vector<Real> &a, int n)
    {
        using std::abs;
        Real det = 1;
        for (int col = 0; col < n; ++col)
        {
            int piv = col;
            Real best = abs(a[col * n + col]);
            for (int r = col + 1; r < n; ++r)
            {
                const Real v = abs(a[r * n + col]);
                if (v > best)
                {
                    best = v;
                    piv = r;
                }
            }
            if (best == 0)
                return Real(0);
            if (piv != col)
            {
                for (int c = 0; c < n; ++c)
                    std::swap(a[piv * n + c], a[col * n + c]);
                det = -det;
            }
            const Real p = a[col * n + col];
            det *= p;
            for (int r = col + 1; r < n; ++r)
            {
                const Real f = a[r * n + col] / p;
                if (f == 0)
                    continue;
                for (int c = col + 1; c < n; ++c)
                    a[r * n + c] -= f * a[col * n + c];
            }
        }
        return det;
    }
}

#endif
