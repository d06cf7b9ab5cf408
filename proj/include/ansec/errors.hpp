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

#ifndef ANSEC_ERRORS_HPP
#define ANSEC_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ansec
{
    // Invalid argument or parameter combination (bad antenna counts, b <= 0, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Result not representable in double precision.
    class RangeError : public std::range_error
    {
    public:
        using std::range_error::range_error;
    };

    // Bisection bracket without a sign change; the ratios cannot produce a valid delta.
    class NoRootError : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    // Malformed or contradictory configuration text.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Numerical failure during evaluation (non-finite log-det, SVD rank loss, ...).
    class NumericError : public std::runtime_error
    {
    public:
        explicit NumericError(const std::string &what, std::optional<std::uint64_t> trial = std::nullopt)
            : std::runtime_error(trial ? what + " (trial " + std::to_string(*trial) + ")" : what),
              trial_index(trial)
        {
        }

        std::optional<std::uint64_t> trial_index;
    };
}

#endif
