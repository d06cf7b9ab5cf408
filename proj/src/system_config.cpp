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

#include "ansec/system_config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ansec/errors.hpp"

namespace ansec
{
    void SystemConfig::validate() const
    {
        if (n_b < 1)
            throw DomainError("n_b must be at least 1: " + describe());
        if (n_b >= n_a)
            throw DomainError("artificial noise needs n_b < n_a: " + describe());
        if (n_e < 1)
            throw DomainError("n_e must be at least 1: " + describe());
        if (!(alpha >= 0.0) || !std::isfinite(alpha))
            throw DomainError("alpha must be finite and nonnegative: " + describe());
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw DomainError("beta must be finite and positive: " + describe());
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw DomainError("gamma must be finite and positive: " + describe());
    }

    int SystemConfig::n_min() const { return std::min(n_e, n_a - n_b); }
    int SystemConfig::n_max() const { return std::max(n_e, n_a - n_b); }
    int SystemConfig::n_hat_min() const { return std::min(n_e, n_a); }
    int SystemConfig::n_hat_max() const { return std::max(n_e, n_a); }

    std::string SystemConfig::describe() const
    {
        std::ostringstream os;
        os.precision(10);
        os << "{n_a=" << n_a << ", n_b=" << n_b << ", n_e=" << n_e << ", alpha=" << alpha << ", beta=" << beta
           << ", gamma=" << gamma << "}";
        return os.str();
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
}
