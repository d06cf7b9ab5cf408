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

// Command-line front end: rate, sweep, mc, design, oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ansec/errors.hpp"
#include "ansec/harness.hpp"
#include "ansec/monte_carlo.hpp"
#include "ansec/parallel.hpp"

namespace
{
    struct CommonFlags
    {
        std::string config;
        std::string out;
        bool json = false;
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> trials;
        std::optional<std::string> units;
        std::optional<std::string> clamp;
    };

    void add_common(CLI::App *cmd, CommonFlags &f, bool needs_config)
    {
        auto *c = cmd->add_option("--config", f.config, "config file (key = value)");
        if (needs_config)
            c->required()->check(CLI::ExistingFile);
        cmd->add_option("--out", f.out, "write output to this file instead of stdout");
        cmd->add_flag("--json", f.json, "emit JSON instead of CSV");
        cmd->add_option("--seed", f.seed, "Monte Carlo seed");
        cmd->add_option("--trials", f.trials, "Monte Carlo trials");
        cmd->add_option("--units", f.units, "nats|bits")->check(CLI::IsMember({"nats", "bits"}));
        cmd->add_option("--clamp", f.clamp, "true|false, per-realization max(0, R_S)")
            ->check(CLI::IsMember({"true", "false"}));
    }

    void apply_overrides(const CommonFlags &f, ansec::McOptions &mc, ansec::Units &units)
    {
        if (f.seed)
            mc.seed = *f.seed;
        if (f.trials)
            mc.trials = *f.trials;
        if (f.units)
            units = ansec::parse_units(*f.units);
        if (f.clamp)
            mc.clamp = ansec::parse_bool(*f.clamp);
    }

    void emit(const CommonFlags &f, const std::string &text)
    {
        if (f.out.empty())
        {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream file(f.out, std::ios::binary);
        if (!file)
            throw ansec::ConfigError("cannot write '" + f.out + "'");
        file << text;
    }

    std::string render(const CommonFlags &f, const ansec::SweepTable &table)
    {
        if (f.json)
            return ansec::to_json(table) + "\n";
        std::ostringstream ss;
        ansec::write_csv(ss, table);
        return ss.str();
    }

    ansec::SweepTable single_row(const ansec::SystemConfig &cfg, const std::vector<ansec::Output> &outputs,
                                 const ansec::McOptions &mc, ansec::Units units)
    {
        ansec::SweepTable t;
        t.columns = ansec::output_columns(outputs);
        t.units = units;
        t.rows.push_back(ansec::run_point(cfg, outputs, mc, units));
        return t;
    }

    std::string csv_number(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"ansec: secrecy rate of artificial-noise MIMO wiretap channels"};
    app.require_subcommand(1);

    CommonFlags rate_f, sweep_f, mc_f, design_f, oracle_f;
    std::string rate_outputs = "exact,lower,upper,asymptotic";

    auto *rate = app.add_subcommand("rate", "closed-form, bound and asymptotic rates at one point");
    add_common(rate, rate_f, true);
    rate->add_option("--outputs", rate_outputs, "comma list of exact, asymptotic, lower, upper, mc, delta_amax, delta_amin");

    auto *sweep = app.add_subcommand("sweep", "run a sweep file");
    add_common(sweep, sweep_f, true);

    auto *mc = app.add_subcommand("mc", "Monte Carlo estimate only");
    add_common(mc, mc_f, true);

    auto *design = app.add_subcommand("design", "critical Eve antenna counts for a config without n_e");
    add_common(design, design_f, true);

    int rows = 1, cols = 1;
    std::vector<double> profile;
    auto *oracle = app.add_subcommand("oracle", "E ln det(I + G diag(profile) G^H) by Monte Carlo");
    add_common(oracle, oracle_f, false);
    oracle->add_option("--rows", rows, "rows of G")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--cols", cols, "columns of G")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--profile", profile, "column variances (one value repeats)")->required()->delimiter(',');

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try
    {
        if (*rate)
        {
            const ansec::ConfigFile c = ansec::load_config(rate_f.config);
            std::vector<ansec::Output> outputs;
            std::stringstream ss(rate_outputs);
            for (std::string item; std::getline(ss, item, ',');)
                outputs.push_back(ansec::parse_output(item));
            ansec::McOptions opts;
            ansec::Units units = ansec::Units::nats;
            apply_overrides(rate_f, opts, units);
            emit(rate_f, render(rate_f, single_row(c.cfg, outputs, opts, units)));
        }
        else if (*sweep)
        {
            ansec::SweepSpec spec = ansec::load_sweep(sweep_f.config);
            apply_overrides(sweep_f, spec.mc, spec.units);
            const ansec::SweepTable table = ansec::run_sweep(spec);
            emit(sweep_f, render(sweep_f, table));
            if (!table.complete)
            {
                std::cerr << "error: sweep aborted: " << table.abort_reason << '\n';
                return table.abort_exit_code;
            }
        }
        else if (*mc)
        {
            const ansec::ConfigFile c = ansec::load_config(mc_f.config);
            ansec::McOptions opts;
            ansec::Units units = ansec::Units::nats;
            apply_overrides(mc_f, opts, units);
            emit(mc_f, render(mc_f, single_row(c.cfg, {ansec::Output::mc}, opts, units)));
        }
        else if (*design)
        {
            const ansec::DesignReport r = ansec::design_report(ansec::load_config(design_f.config, false));
            if (design_f.json)
                emit(design_f, ansec::to_json(r) + "\n");
            else
            {
                std::string s = "n_a,n_b,alpha,beta,gamma,critical_n_e_sufficient,critical_n_e_necessary,"
                                "guard_satisfied,advisory\n";
                s += std::to_string(r.params.n_a) + "," + std::to_string(r.params.n_b) + "," +
                     csv_number(r.params.alpha) + "," + csv_number(r.params.beta) + "," + csv_number(r.params.gamma) +
                     "," + std::to_string(r.critical_sufficient) + "," + std::to_string(r.critical_necessary) + "," +
                     (r.guard_satisfied ? "true" : "false") + "," + (r.advisory ? "true" : "false") + "\n";
                emit(design_f, s);
            }
        }
        else if (*oracle)
        {
            if (profile.size() == 1)
                profile.assign(cols, profile[0]);
            ansec::McOptions opts;
            ansec::Units units = ansec::Units::nats;
            apply_overrides(oracle_f, opts, units);
            const ansec::MCEstimate e = ansec::mc_logdet_oracle(rows, cols, profile, opts.trials, opts.seed,
                                                                ansec::default_threads());
            const double mean = ansec::to_units(e.mean, units);
            const double se = ansec::to_units(e.std_error, units);
            if (oracle_f.json)
            {
                nlohmann::ordered_json j;
                j["rows"] = rows;
                j["cols"] = cols;
                j["profile"] = profile;
                j["units"] = ansec::to_string(units);
                j["mean"] = mean;
                j["stderr"] = se;
                j["trials"] = e.trials;
                j["seed"] = e.seed;
                emit(oracle_f, j.dump(2) + "\n");
            }
            else
                emit(oracle_f, "rows,cols,mean,stderr,trials,seed\n" + std::to_string(rows) + "," +
                                   std::to_string(cols) + "," + csv_number(mean) + "," + csv_number(se) + "," +
                                   std::to_string(e.trials) + "," + std::to_string(e.seed) + "\n");
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return ansec::exit_code_for(std::current_exception());
    }
    return 0;
}
