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

#include "ansec/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ansec/asymptotics.hpp"
#include "ansec/closed_form.hpp"
#include "ansec/errors.hpp"
#include "ansec/monte_carlo.hpp"
#include "ansec/parallel.hpp"

namespace ansec
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, sep))
                out.push_back(trim(item));
            return out;
        }

        double parse_double(const std::string &key, const std::string &text)
        {
            double v = 0.0;
            const char *first = text.data();
            const char *last = first + text.size();
            if (!text.empty() && *first == '+')
                ++first;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last || !std::isfinite(v))
                throw ConfigError("'" + key + "': not a finite number: '" + text + "'");
            return v;
        }

        long long parse_integer(const std::string &key, const std::string &text)
        {
            long long v = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw ConfigError("'" + key + "': not an integer: '" + text + "'");
            return v;
        }

        std::uint64_t parse_u64(const std::string &key, const std::string &text)
        {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw ConfigError("'" + key + "': not an unsigned integer: '" + text + "'");
            return v;
        }

        int parse_count(const std::string &key, const std::string &text)
        {
            const long long v = parse_integer(key, text);
            if (v < 1 || v > 1000000)
                throw ConfigError("'" + key + "' out of range: " + text);
            return static_cast<int>(v);
        }

        // key -> value, rejecting duplicates and malformed lines.
        class KeyValues
        {
        public:
            explicit KeyValues(std::istream &in)
            {
                std::string line;
                int line_no = 0;
                while (std::getline(in, line))
                {
                    ++line_no;
                    if (const auto hash = line.find('#'); hash != std::string::npos)
                        line.erase(hash);
                    line = trim(line);
                    if (line.empty())
                        continue;
                    const auto eq = line.find('=');
                    if (eq == std::string::npos)
                        throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
                    const std::string key = trim(line.substr(0, eq));
                    const std::string value = trim(line.substr(eq + 1));
                    if (key.empty() || value.empty())
                        throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
                    if (!map_.emplace(key, value).second)
                        throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
                }
                if (in.bad())
                    throw ConfigError("read error");
            }

            bool has(const std::string &k) const { return map_.count(k) != 0; }

            std::optional<std::string> take(const std::string &k)
            {
                auto it = map_.find(k);
                if (it == map_.end())
                    return std::nullopt;
                std::string v = it->second;
                map_.erase(it);
                return v;
            }

            void expect_empty() const
            {
                if (!map_.empty())
                    throw ConfigError("unknown key '" + map_.begin()->first + "'");
            }

        private:
            std::map<std::string, std::string> map_;
        };

        // Reads name or name_db; exactly one must be present unless optional.
        void take_power(KeyValues &kv, const std::string &name, double &linear, std::optional<double> &db,
                        bool optional)
        {
            const bool lin_present = kv.has(name);
            const bool db_present = kv.has(name + "_db");
            if (lin_present && db_present)
                throw ConfigError("both '" + name + "' and '" + name + "_db' given");
            if (lin_present)
            {
                linear = parse_double(name, *kv.take(name));
                db.reset();
            }
            else if (db_present)
            {
                db = parse_double(name + "_db", *kv.take(name + "_db"));
                linear = db_to_linear(*db);
            }
            else if (!optional)
                throw ConfigError("missing '" + name + "' (or '" + name + "_db')");
        }

        ConfigFile take_config(KeyValues &kv, bool require_n_e, std::optional<SweepAxis> axis)
        {
            ConfigFile c;
            auto need = [&](const std::string &k) -> std::string
            {
                auto v = kv.take(k);
                if (!v)
                    throw ConfigError("missing '" + k + "'");
                return *v;
            };
            c.cfg.n_a = parse_count("n_a", need("n_a"));
            c.cfg.n_b = parse_count("n_b", need("n_b"));
            if (auto v = kv.take("n_e"))
            {
                c.cfg.n_e = parse_count("n_e", *v);
                c.has_n_e = true;
            }
            else if (require_n_e && axis != SweepAxis::n_e)
                throw ConfigError("missing 'n_e'");
            take_power(kv, "alpha", c.cfg.alpha, c.alpha_db, false);
            take_power(kv, "beta", c.cfg.beta, c.beta_db, axis == SweepAxis::beta_db);
            take_power(kv, "gamma", c.cfg.gamma, c.gamma_db, axis == SweepAxis::gamma_db);
            return c;
        }

        void check_config(const ConfigFile &c, bool need_n_e)
        {
            SystemConfig probe = c.cfg;
            if (!need_n_e && !c.has_n_e)
                probe.n_e = 1;
            try
            {
                probe.validate();
            }
            catch (const DomainError &e)
            {
                throw ConfigError(e.what());
            }
        }

        std::string format_number(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        std::string format_csv(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
        }

        std::string join_values(const std::vector<double> &vals)
        {
            std::string s;
            for (std::size_t i = 0; i < vals.size(); ++i)
                s += (i ? ", " : "") + format_number(vals[i]);
            return s;
        }

        // start:step:stop, stop included when hit to within a small fraction of step.
        std::vector<double> parse_values(const std::string &text)
        {
            std::vector<double> out;
            if (text.find(':') != std::string::npos)
            {
                const auto parts = split(text, ':');
                if (parts.size() != 3)
                    throw ConfigError("'values': range must be start:step:stop");
                const double start = parse_double("values", parts[0]);
                const double step = parse_double("values", parts[1]);
                const double stop = parse_double("values", parts[2]);
                if (!(step > 0.0) || stop < start)
                    throw ConfigError("'values': range needs step > 0 and stop >= start");
                const double n = std::floor((stop - start) / step + 1e-9);
                if (n > 1e6)
                    throw ConfigError("'values': range too long");
                for (long long i = 0; i <= static_cast<long long>(n); ++i)
                    out.push_back(start + static_cast<double>(i) * step);
                return out;
            }
            for (const auto &item : split(text, ','))
                out.push_back(parse_double("values", item));
            return out;
        }

        template <typename E>
        [[noreturn]] void rethrow_with(const E &e, const SystemConfig &cfg)
        {
            throw E(std::string(e.what()) + " [" + cfg.describe() + "]");
        }
    }

    Output parse_output(const std::string &name)
    {
        static const std::map<std::string, Output> names = {
            {"exact", Output::exact}, {"asymptotic", Output::asymptotic}, {"lower", Output::lower},
            {"upper", Output::upper}, {"mc", Output::mc}, {"delta_amax", Output::delta_amax},
            {"delta_amin", Output::delta_amin}};
        const auto it = names.find(name);
        if (it == names.end())
            throw ConfigError("unknown output '" + name + "'");
        return it->second;
    }

    std::string to_string(Output o)
    {
        switch (o)
        {
        case Output::exact: return "exact";
        case Output::asymptotic: return "asymptotic";
        case Output::lower: return "lower";
        case Output::upper: return "upper";
        case Output::mc: return "mc";
        case Output::delta_amax: return "delta_amax";
        case Output::delta_amin: return "delta_amin";
        }
        return "?";
    }

    Units parse_units(const std::string &name)
    {
        if (name == "nats")
            return Units::nats;
        if (name == "bits")
            return Units::bits;
        throw ConfigError("units must be nats or bits, got '" + name + "'");
    }

    std::string to_string(Units u) { return u == Units::bits ? "bits" : "nats"; }

    SweepAxis parse_axis(const std::string &name)
    {
        if (name == "gamma_db")
            return SweepAxis::gamma_db;
        if (name == "beta_db")
            return SweepAxis::beta_db;
        if (name == "n_e")
            return SweepAxis::n_e;
        throw ConfigError("axis must be gamma_db, beta_db or n_e, got '" + name + "'");
    }

    std::string to_string(SweepAxis a)
    {
        switch (a)
        {
        case SweepAxis::gamma_db: return "gamma_db";
        case SweepAxis::beta_db: return "beta_db";
        case SweepAxis::n_e: return "n_e";
        }
        return "?";
    }

    bool parse_bool(const std::string &text)
    {
        if (text == "true" || text == "1" || text == "yes")
            return true;
        if (text == "false" || text == "0" || text == "no")
            return false;
        throw ConfigError("expected true or false, got '" + text + "'");
    }

    ConfigFile parse_config(std::istream &in, bool require_n_e)
    {
        KeyValues kv(in);
        ConfigFile c = take_config(kv, require_n_e, std::nullopt);
        kv.expect_empty();
        check_config(c, require_n_e);
        return c;
    }

    ConfigFile parse_config_text(const std::string &text, bool require_n_e)
    {
        std::istringstream in(text);
        return parse_config(in, require_n_e);
    }

    ConfigFile load_config(const std::string &path, bool require_n_e)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open '" + path + "'");
        return parse_config(in, require_n_e);
    }

    std::string serialize_config(const ConfigFile &c)
    {
        std::string s;
        s += "n_a = " + std::to_string(c.cfg.n_a) + "\n";
        s += "n_b = " + std::to_string(c.cfg.n_b) + "\n";
        if (c.has_n_e)
            s += "n_e = " + std::to_string(c.cfg.n_e) + "\n";
        auto power = [&](const std::string &name, double linear, const std::optional<double> &db)
        {
            if (db)
                s += name + "_db = " + format_number(*db) + "\n";
            else
                s += name + " = " + format_number(linear) + "\n";
        };
        power("alpha", c.cfg.alpha, c.alpha_db);
        power("beta", c.cfg.beta, c.beta_db);
        power("gamma", c.cfg.gamma, c.gamma_db);
        return s;
    }

    void SweepSpec::validate() const
    {
        if (values.empty())
            throw ConfigError("sweep needs at least one value");
        for (std::size_t i = 1; i < values.size(); ++i)
            if (!(values[i] > values[i - 1]))
                throw ConfigError("sweep values must be strictly increasing");
        if (outputs.empty())
            throw ConfigError("sweep needs at least one output");
        if (mc.trials < 2)
            throw ConfigError("mc_trials must be at least 2");
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (axis == SweepAxis::n_e && (values[i] != std::floor(values[i]) || values[i] < 1 || values[i] > 1e6))
                throw ConfigError("n_e values must be positive integers");
            try
            {
                point(i).validate();
            }
            catch (const DomainError &e)
            {
                throw ConfigError(std::string("sweep value ") + format_number(values[i]) + ": " + e.what());
            }
        }
    }

    SystemConfig SweepSpec::point(std::size_t i) const
    {
        SystemConfig c = base.cfg;
        switch (axis)
        {
        case SweepAxis::gamma_db: c.gamma = db_to_linear(values.at(i)); break;
        case SweepAxis::beta_db: c.beta = db_to_linear(values.at(i)); break;
        case SweepAxis::n_e: c.n_e = static_cast<int>(values.at(i)); break;
        }
        return c;
    }

    SweepSpec parse_sweep(std::istream &in)
    {
        KeyValues kv(in);
        SweepSpec s;
        const auto axis = kv.take("axis");
        if (!axis)
            throw ConfigError("missing 'axis'");
        s.axis = parse_axis(*axis);
        s.base = take_config(kv, true, s.axis);
        if (s.axis != SweepAxis::n_e && !s.base.has_n_e)
            throw ConfigError("missing 'n_e'");
        const auto values = kv.take("values");
        if (!values)
            throw ConfigError("missing 'values'");
        s.values = parse_values(*values);
        const auto outputs = kv.take("outputs");
        if (!outputs)
            throw ConfigError("missing 'outputs'");
        for (const auto &o : split(*outputs, ','))
        {
            const Output parsed = parse_output(o);
            if (std::find(s.outputs.begin(), s.outputs.end(), parsed) != s.outputs.end())
                throw ConfigError("duplicate output '" + o + "'");
            s.outputs.push_back(parsed);
        }
        if (auto v = kv.take("mc_trials"))
            s.mc.trials = parse_u64("mc_trials", *v);
        if (auto v = kv.take("seed"))
            s.mc.seed = parse_u64("seed", *v);
        if (auto v = kv.take("units"))
            s.units = parse_units(*v);
        if (auto v = kv.take("clamp"))
            s.mc.clamp = parse_bool(*v);
        kv.expect_empty();
        s.validate();
        return s;
    }

    SweepSpec parse_sweep_text(const std::string &text)
    {
        std::istringstream in(text);
        return parse_sweep(in);
    }

    SweepSpec load_sweep(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open '" + path + "'");
        return parse_sweep(in);
    }

    std::string serialize_sweep(const SweepSpec &s)
    {
        std::string out = serialize_config(s.base);
        // The swept parameter is carried by the axis; drop it from the base.
        std::vector<std::string> lines = split(out, '\n');
        out.clear();
        const std::string skip = s.axis == SweepAxis::gamma_db ? "gamma" : s.axis == SweepAxis::beta_db ? "beta" : "n_e";
        for (const auto &l : lines)
            if (!l.empty() && l.rfind(skip + " ", 0) != 0 && l.rfind(skip + "_db ", 0) != 0)
                out += l + "\n";
        out += "axis = " + to_string(s.axis) + "\n";
        out += "values = " + join_values(s.values) + "\n";
        std::string outs;
        for (std::size_t i = 0; i < s.outputs.size(); ++i)
            outs += (i ? ", " : "") + to_string(s.outputs[i]);
        out += "outputs = " + outs + "\n";
        out += "mc_trials = " + std::to_string(s.mc.trials) + "\n";
        out += "seed = " + std::to_string(s.mc.seed) + "\n";
        out += "units = " + to_string(s.units) + "\n";
        out += std::string("clamp = ") + (s.mc.clamp ? "true" : "false") + "\n";
        return out;
    }

    double RateRecord::at(const std::string &name) const
    {
        for (const auto &[k, v] : values)
            if (k == name)
                return v;
        throw std::out_of_range("no column '" + name + "'");
    }

    std::vector<std::string> output_columns(const std::vector<Output> &outputs)
    {
        std::vector<std::string> cols;
        for (Output o : outputs)
        {
            cols.push_back(to_string(o));
            if (o == Output::exact)
                cols.push_back("exact_clamped");
            if (o == Output::mc)
                cols.push_back("mc_stderr");
        }
        return cols;
    }

    RateRecord run_point(const SystemConfig &cfg, const std::vector<Output> &outputs, const McOptions &mc,
                         Units units)
    {
        RateRecord rec;
        rec.cfg = cfg;
        try
        {
            cfg.validate();
            std::optional<RateBounds> bounds;
            std::optional<PositivityConditions> positivity;
            auto put = [&](const std::string &name, double nats) { rec.values.emplace_back(name, to_units(nats, units)); };
            for (Output o : outputs)
            {
                switch (o)
                {
                case Output::exact:
                {
                    const double r = average_secrecy_rate(cfg);
                    put("exact", r);
                    put("exact_clamped", std::max(0.0, r));
                    break;
                }
                case Output::asymptotic: put("asymptotic", asymptotic_average_rate(cfg)); break;
                case Output::lower:
                case Output::upper:
                    if (!bounds)
                        bounds = average_rate_bounds(cfg);
                    put(to_string(o), o == Output::lower ? bounds->lower : bounds->upper);
                    break;
                case Output::mc:
                {
                    const unsigned threads = mc.threads ? mc.threads : default_threads();
                    const MCEstimate e = mc_average_secrecy_rate(cfg, mc.trials, mc.seed, mc.clamp, threads);
                    put("mc", e.mean);
                    put("mc_stderr", e.std_error);
                    break;
                }
                case Output::delta_amax:
                case Output::delta_amin:
                    if (!positivity)
                        positivity = positivity_conditions(cfg);
                    put(to_string(o), o == Output::delta_amax ? positivity->delta_amax : positivity->delta_amin);
                    break;
                }
            }
        }
        catch (const NoRootError &e) { rethrow_with(e, cfg); }
        catch (const DomainError &e) { rethrow_with(e, cfg); }
        catch (const RangeError &e) { rethrow_with(e, cfg); }
        catch (const ConfigError &e) { rethrow_with(e, cfg); }
        catch (const NumericError &e)
        {
            throw NumericError(std::string(e.what()) + " [" + cfg.describe() + "]");
        }
        return rec;
    }

    SweepTable run_sweep(const SweepSpec &spec)
    {
        spec.validate();
        SweepTable table;
        table.columns = output_columns(spec.outputs);
        table.units = spec.units;
        for (std::size_t i = 0; i < spec.values.size(); ++i)
        {
            try
            {
                table.rows.push_back(run_point(spec.point(i), spec.outputs, spec.mc, spec.units));
            }
            catch (...)
            {
                const auto err = std::current_exception();
                table.complete = false;
                table.abort_exit_code = exit_code_for(err);
                try
                {
                    std::rethrow_exception(err);
                }
                catch (const std::exception &e)
                {
                    table.abort_reason = "row " + std::to_string(i) + " (" + to_string(spec.axis) + " = " +
                                         format_csv(spec.values[i]) + "): " + e.what();
                }
                catch (...)
                {
                    table.abort_reason = "row " + std::to_string(i) + ": unknown error";
                }
                break;
            }
        }
        return table;
    }

    DesignReport design_report(const ConfigFile &partial)
    {
        const SystemConfig &c = partial.cfg;
        DesignReport r;
        r.params = {c.n_a, c.n_b, c.alpha, c.beta, c.gamma};
        SystemConfig probe = c;
        probe.n_e = 1;
        probe.validate();
        const CriticalEveAntennas crit = critical_eve_antennas(r.params);
        r.critical_sufficient = crit.sufficient;
        r.critical_necessary = crit.necessary;
        r.guard_satisfied = high_snr_guard(c.alpha, c.beta, c.gamma);
        r.advisory = !r.guard_satisfied || std::min({c.n_a, c.n_b, c.n_a - c.n_b}) <= 2;
        return r;
    }

    void write_csv(std::ostream &out, const SweepTable &table)
    {
        out << "n_a,n_b,n_e,alpha,beta,gamma";
        for (const auto &c : table.columns)
            out << ',' << c;
        out << '\n';
        for (const auto &row : table.rows)
        {
            out << row.cfg.n_a << ',' << row.cfg.n_b << ',' << row.cfg.n_e << ',' << format_csv(row.cfg.alpha) << ','
                << format_csv(row.cfg.beta) << ',' << format_csv(row.cfg.gamma);
            for (const auto &[k, v] : row.values)
                out << ',' << format_csv(v);
            out << '\n';
        }
        if (!table.complete)
            out << "# aborted: " << table.abort_reason << '\n';
    }

    std::string to_json(const SweepTable &table)
    {
        nlohmann::ordered_json j;
        j["units"] = to_string(table.units);
        j["complete"] = table.complete;
        if (!table.complete)
            j["aborted"] = table.abort_reason;
        j["columns"] = table.columns;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto &row : table.rows)
        {
            nlohmann::ordered_json r;
            r["n_a"] = row.cfg.n_a;
            r["n_b"] = row.cfg.n_b;
            r["n_e"] = row.cfg.n_e;
            r["alpha"] = row.cfg.alpha;
            r["beta"] = row.cfg.beta;
            r["gamma"] = row.cfg.gamma;
            for (const auto &[k, v] : row.values)
                r[k] = v;
            j["rows"].push_back(r);
        }
        return j.dump(2);
    }

    std::string to_json(const DesignReport &report)
    {
        nlohmann::ordered_json j;
        j["n_a"] = report.params.n_a;
        j["n_b"] = report.params.n_b;
        j["alpha"] = report.params.alpha;
        j["beta"] = report.params.beta;
        j["gamma"] = report.params.gamma;
        j["critical_n_e_sufficient"] = report.critical_sufficient;
        j["critical_n_e_necessary"] = report.critical_necessary;
        j["guard_satisfied"] = report.guard_satisfied;
        j["advisory"] = report.advisory;
        return j.dump(2);
    }

    int exit_code_for(const std::exception_ptr &e)
    {
        try
        {
            std::rethrow_exception(e);
        }
        catch (const NumericError &) { return 2; }
        catch (const RangeError &) { return 2; }
        catch (const DomainError &) { return 1; }
        catch (const ConfigError &) { return 1; }
        catch (...) { return 2; }
    }
}
