// Copyright 2026 The hardy-check Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HARDY_CLI_HPP
#define HARDY_CLI_HPP

// Command-line front end. Exit codes: 0 when every check passes, 1 when a
// check fails, 2 on usage errors.

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "hardy/report_format.hpp"

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Acceptance bounds used by the `optimize` exit code.
inline constexpr double kOptimizerOracleTol = 1e-6;
inline constexpr double kStationarityTol = 1e-4;
inline constexpr double kStationarityStep = 1e-5;

enum class Format { Json, Csv, Text };

struct CommandConfig {
    std::string subcommand;
    double theta = std::numbers::pi / 6;
    double tol = kZeroTol;
    Format format = Format::Json;
    std::optional<std::string> out;
    std::vector<std::string> drop;
    double lo = kDefaultBracketLo;
    double hi = kDefaultBracketHi;
    std::size_t max_iter = 200;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Locale-independent decimal parse of the whole string.
inline double parse_real(const std::string &text, const std::string &flag) {
    double x = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x)) {
        throw UsageError(flag + ": not a decimal number: " + text);
    }
    return x;
}

struct Rendered {
    std::string bytes;
    bool checks_pass;
};

inline ConstraintSet constraints_for(const CommandConfig &cfg) {
    auto cs = hardy_constraint_set();
    for (const auto &id : cfg.drop) {
        cs = cs.without(id);
    }
    return cs;
}

/// Runs the checks for `cfg` and renders the report in the requested format.
inline Rendered execute(const CommandConfig &cfg) {
    const std::string &cmd = cfg.subcommand;
    if (cfg.format == Format::Csv && cmd != "table") {
        throw UsageError("csv output is only available for the table command");
    }

    if (cmd == "table") {
        auto table = joint_probability_table(build_hardy_configuration(cfg.theta));
        switch (cfg.format) {
            case Format::Csv:
                return {table_to_csv(table), true};
            case Format::Text:
                return {table_to_text(table, cfg.theta), true};
            default:
                return {table_to_json(table, cfg.theta), true};
        }
    }

    if (cmd == "verify") {
        auto table = joint_probability_table(build_hardy_configuration(cfg.theta));
        auto predictions = verify_hardy_predictions(table, cfg.tol);
        auto ns = no_signalling_check(table, kIdentityTol);
        bool pass = predictions.all_pass() && ns.pass;
        return {cfg.format == Format::Text ? verify_to_text(cfg.theta, predictions, ns)
                                           : verify_to_json(cfg.theta, predictions, ns),
                pass};
    }

    if (cmd == "counterfactual") {
        auto cs = constraints_for(cfg);
        auto r = locality_violation_report(cs);
        return {cfg.format == Format::Text ? counterfactual_to_text(cs, r) : counterfactual_to_json(cs, r),
                r.violation};
    }

    if (cmd == "lhv") {
        auto cs = constraints_for(cfg);
        auto r = lhv_feasibility(cs, cfg.drop.empty() ? std::vector<Event>{kEq2, kEq3, kEq1} : std::vector<Event>{});
        return {cfg.format == Format::Text ? lhv_to_text(cs, r) : lhv_to_json(cs, r), !r.feasible};
    }

    // optimize
    if (!(cfg.lo > 0 && cfg.lo < cfg.hi && cfg.hi < std::numbers::pi / 2)) {
        throw UsageError("--lo/--hi must satisfy 0 < lo < hi < pi/2");
    }
    if (cfg.hi - cfg.lo <= 2 * kStationarityStep) {
        throw UsageError("--lo/--hi bracket is too narrow");
    }
    auto r = maximize_paradox(cfg.lo, cfg.hi, cfg.tol, cfg.max_iter);
    auto fd = finite_difference_scan(r.theta_star, kStationarityStep);
    bool pass = r.oracle_gap <= kOptimizerOracleTol && std::abs(fd.estimate) < kStationarityTol;
    return {cfg.format == Format::Text ? optimize_to_text(r, fd) : optimize_to_json(r, fd), pass};
}

/// Parses `args` (without the program name), runs the command and writes the
/// report to `--out` or `out`. Diagnostics go to `err`.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hardy-experiment prediction, counterfactual-logic and hidden-variable checks", "hardy_check"};
    CommandConfig cfg;
    std::string theta_text;
    std::string tol_text;
    std::string lo_text;
    std::string hi_text;
    std::string format_text = "json";
    std::string out_path;

    app.add_option("command", cfg.subcommand, "verify | counterfactual | lhv | optimize | table")
        ->required()
        ->check(CLI::IsMember({"verify", "counterfactual", "lhv", "optimize", "table"}));
    app.add_option("--theta", theta_text, "Schmidt angle in (0, pi/2); default pi/6");
    app.add_option("--tol", tol_text, "zero tolerance (verify) or bracket tolerance (optimize); default 1e-10");
    app.add_option("--format", format_text, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write the report to this file instead of standard output");
    app.add_option("--drop", cfg.drop, "constraint to remove (Eq1..Eq4); counterfactual and lhv only")
        ->check(CLI::IsMember({"Eq1", "Eq2", "Eq3", "Eq4"}));
    app.add_option("--lo", lo_text, "optimize: bracket lower end");
    app.add_option("--hi", hi_text, "optimize: bracket upper end");
    app.add_option("--max-iter", cfg.max_iter, "optimize: golden-section iteration limit");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "hardy_check: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!theta_text.empty()) {
            cfg.theta = parse_real(theta_text, "--theta");
        }
        if (!tol_text.empty()) {
            cfg.tol = parse_real(tol_text, "--tol");
        }
        if (!lo_text.empty()) {
            cfg.lo = parse_real(lo_text, "--lo");
        }
        if (!hi_text.empty()) {
            cfg.hi = parse_real(hi_text, "--hi");
        }
        if (!(cfg.theta > 0 && cfg.theta < std::numbers::pi / 2)) {
            throw UsageError("--theta must lie strictly inside (0, pi/2)");
        }
        if (!(cfg.tol > 0)) {
            throw UsageError("--tol must be positive");
        }
        cfg.format = format_text == "csv" ? Format::Csv : format_text == "text" ? Format::Text : Format::Json;
        if (!out_path.empty()) {
            cfg.out = out_path;
        }

        auto rendered = execute(cfg);
        if (cfg.out) {
            std::ofstream file(*cfg.out, std::ios::binary);
            if (!file) {
                throw UsageError("cannot open " + *cfg.out + " for writing");
            }
            file << rendered.bytes;
        } else {
            out << rendered.bytes;
        }
        return rendered.checks_pass ? kExitOk : kExitCheckFailed;
    } catch (const UsageError &e) {
        err << "hardy_check: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonConvergence &e) {
        err << "hardy_check: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace hardy::cli

#endif
