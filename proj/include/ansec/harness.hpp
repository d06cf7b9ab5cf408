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

#ifndef ANSEC_HARNESS_HPP
#define ANSEC_HARNESS_HPP

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ansec/system_config.hpp"

namespace ansec
{
    enum class Output
    {
        exact,
        asymptotic,
        lower,
        upper,
        mc,
        delta_amax,
        delta_amin
    };

    enum class Units
    {
        nats,
        bits
    };

    enum class SweepAxis
    {
        gamma_db,
        beta_db,
        n_e
    };

    Output parse_output(const std::string &name);
    std::string to_string(Output o);
    Units parse_units(const std::string &name);
    std::string to_string(Units u);
    SweepAxis parse_axis(const std::string &name);
    std::string to_string(SweepAxis a);
    bool parse_bool(const std::string &text);

    /// The one place nats become bits.
    inline double to_units(double nats, Units u) { return u == Units::bits ? nats / kLn2 : nats; }

    /// A point configuration as written in a file. The dB fields remember which
    /// parameters were given in dB so that serialisation writes them back that way.
    struct ConfigFile
    {
        SystemConfig cfg;
        bool has_n_e = false;
        std::optional<double> alpha_db;
        std::optional<double> beta_db;
        std::optional<double> gamma_db;
    };

    struct McOptions
    {
        std::uint64_t trials = 10000;
        std::uint64_t seed = 1;
        bool clamp = true;
        unsigned threads = 0; // 0: ANSEC_THREADS or hardware concurrency
    };

    struct SweepSpec
    {
        ConfigFile base;
        SweepAxis axis = SweepAxis::gamma_db;
        std::vector<double> values;
        std::vector<Output> outputs;
        McOptions mc;
        Units units = Units::nats;

        /// Throws ConfigError for empty or non-increasing values, empty outputs,
        /// or axis values that break the config constraints.
        void validate() const;
        SystemConfig point(std::size_t i) const;
    };

    /// Flat "key = value" text; '#' starts a comment. Keys: n_a, n_b, n_e,
    /// alpha | alpha_db, beta | beta_db, gamma | gamma_db. Sweep files add axis,
    /// values, outputs, mc_trials, seed, units, clamp.
    ConfigFile parse_config(std::istream &in, bool require_n_e = true);
    ConfigFile parse_config_text(const std::string &text, bool require_n_e = true);
    ConfigFile load_config(const std::string &path, bool require_n_e = true);
    std::string serialize_config(const ConfigFile &c);

    SweepSpec parse_sweep(std::istream &in);
    SweepSpec parse_sweep_text(const std::string &text);
    SweepSpec load_sweep(const std::string &path);
    std::string serialize_sweep(const SweepSpec &s);

    /// Named values in column order, already converted to the requested units.
    struct RateRecord
    {
        SystemConfig cfg;
        std::vector<std::pair<std::string, double>> values;

        double at(const std::string &name) const;
    };

    /// Column names produced by a set of outputs: exact adds exact_clamped,
    /// mc adds mc_stderr.
    std::vector<std::string> output_columns(const std::vector<Output> &outputs);

    /// Evaluates the requested quantities at one point. Errors are rethrown with
    /// the same type and the config appended to the message.
    RateRecord run_point(const SystemConfig &cfg, const std::vector<Output> &outputs, const McOptions &mc,
                         Units units = Units::nats);

    struct SweepTable
    {
        std::vector<std::string> columns;
        std::vector<RateRecord> rows;
        Units units = Units::nats;
        bool complete = true;
        std::string abort_reason; // set when a row failed; rows holds everything before it
        int abort_exit_code = 0;
    };

    /// Rows in axis order. A failing row stops the sweep and marks the table incomplete.
    SweepTable run_sweep(const SweepSpec &spec);

    struct DesignReport
    {
        DesignParameters params;
        int critical_sufficient = 0; // Delta(A_max) <= 0 from here on
        int critical_necessary = 0;  // Delta(A_min) <= 0 from here on
        bool guard_satisfied = false; // min{alpha gamma, alpha beta gamma} >= 4
        bool advisory = false;        // high-SNR guard or antenna minimum violated
    };

    DesignReport design_report(const ConfigFile &partial);

    /// Header n_a,n_b,n_e,alpha,beta,gamma then the table columns, %.12g floats.
    /// An incomplete table ends with a "# aborted: ..." line.
    void write_csv(std::ostream &out, const SweepTable &table);
    std::string to_json(const SweepTable &table);
    std::string to_json(const DesignReport &report);

    /// Process exit code for an exception: 1 domain/config, 2 numeric/range, 3 other.
    int exit_code_for(const std::exception_ptr &e);
}

#endif
