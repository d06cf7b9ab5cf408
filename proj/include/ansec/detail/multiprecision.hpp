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

#ifndef ANSEC_DETAIL_MULTIPRECISION_HPP
#define ANSEC_DETAIL_MULTIPRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "ansec/errors.hpp"

namespace ansec::detail
{
    template <unsigned Digits10>
    using mp_float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits10>,
                                                   boost::multiprecision::et_off>;

    // Largest precision tier; requests beyond it are rejected.
    inline constexpr unsigned kMaxDigits10 = 1600;

    // Calls fn(Real{}) with the smallest fixed-precision MPFR type holding at
    // least `digits10` decimal digits. Fixed tiers keep every evaluation
    // reentrant (no global default precision is touched).
    template <class Fn>
    double with_precision(double digits10, Fn &&fn)
    {
        if (!(digits10 <= kMaxDigits10))
            throw RangeError("required working precision exceeds " + std::to_string(kMaxDigits10) + " digits");
        if (digits10 <= 50)
            return fn(mp_float<50>{});
        if (digits10 <= 100)
            return fn(mp_float<100>{});
        if (digits10 <= 200)
            return fn(mp_float<200>{});
        if (digits10 <= 400)
            return fn(mp_float<400>{});
        if (digits10 <= 800)
            return fn(mp_float<800>{});
        return fn(mp_float<kMaxDigits10>{});
    }

    // Guard digits for the series/recurrence path of the incomplete gamma
    // sequence, which loses about log10(e^b) digits for b up to the limit.
    inline constexpr double kMpRecurrenceLimit = 30.0;

    inline double gamma_guard_digits(double b)
    {
        return 0.9 * std::min(b, kMpRecurrenceLimit) + 5.0;
    }
}

#endif
