// Copyright 2026 The qprime Authors
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

// qprime: command-line front end.
//
//   qprime pi 122 --engine exact
//   qprime table 7.2 --band squared
//   qprime figure 9.1 --format json
//   qprime divisibility --sweep 100000
//
// Exit status: 0 success, 2 when a check command finds a violation, 1 on error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "qprime/report.hpp"

using namespace qprime;

int main(int argc, char** argv) {
    CLI::App app{"Prime counting, interval distribution models and their sieve checks"};
    app.require_subcommand(1);
    app.fallthrough();

    double a_prime = model::kDefaultAPrime;
    std::string band = "squared";
    std::string mode = "fit";
    std::string engine = "oracle";
    std::string format = "csv";
    std::uint64_t ceiling = oracle::kDefaultCeiling;
    bool exact_prec = false;

    app.add_option("--a-prime", a_prime, "Density constant A'")->check(CLI::PositiveNumber);
    app.add_option("--band", band, "Twin band variant")->check(CLI::IsMember({"squared", "printed"}));
    app.add_option("--mode", mode, "fit: A' as given, unit: A' = ln 3")->check(CLI::IsMember({"fit", "unit"}));
    app.add_option("--engine", engine, "Counting engine for pi")->check(CLI::IsMember({"oracle", "exact"}));
    app.add_option("--ceiling", ceiling, "Largest integer the sieve may reach");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--exact-prec", exact_prec, "Use ln prec(n+1) instead of ln(n+1) in the models");

    std::uint64_t pi_x = 0;
    auto* pi = app.add_subcommand("pi", "sigma(x) and pi(x)");
    pi->add_option("x", pi_x)->required();

    std::string table_id;
    auto* tab = app.add_subcommand("table", "Reproduce a table with model, observed and delta columns");
    tab->add_option("id", table_id)->required()->check(CLI::IsMember(report::table_ids()));

    std::string figure_id;
    std::optional<std::uint64_t> figure_range;
    auto* fig = app.add_subcommand("figure", "Per-n observed counts with model mean and band");
    fig->add_option("id", figure_id)->required()->check(CLI::IsMember(report::figure_ids()));
    fig->add_option("--range", figure_range, "Last n (or 2m for 9.1)");

    std::uint64_t two_m = 0;
    auto* gb = app.add_subcommand("goldbach", "Odd-prime pairs summing to 2m");
    gb->add_option("two_m", two_m)->required();

    std::optional<std::uint64_t> div_n;
    std::optional<std::uint64_t> div_sweep;
    auto* div = app.add_subcommand("divisibility", "Divisibility of 2^n -+ 1 by 2n+1");
    div->add_option("n", div_n);
    div->add_option("--sweep", div_sweep, "Check every applicable n up to this bound");

    std::uint64_t gap_x = 0;
    auto* gap = app.add_subcommand("gapcheck", "Gap bound p' - p < 2 isqrt(p') up to x");
    gap->add_option("x", gap_x)->required();

    std::uint64_t two_n = 0;
    auto* cls = app.add_subcommand("classify", "Primality and twin test from sigma differences");
    cls->add_option("two_n", two_n)->required();

    std::uint64_t z = 0;
    auto* unt = app.add_subcommand("untouchable", "Witness that odd z is a proper-divisor sum");
    unt->add_option("z", z)->required();

    auto* quad = app.add_subcommand("quadruplets", "Quadruplet counts over biquadratic intervals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        report::Context ctx;
        ctx.params.a_prime = a_prime;
        ctx.params.band = model::parse_band(band);
        ctx.params.mode = model::parse_mode(mode);
        ctx.params.exact_prec = exact_prec;
        ctx.engine = report::parse_engine(engine);
        ctx.sieve.ceiling = ceiling;

        report::Table t;
        if (pi->parsed()) {
            t = report::pi_report(pi_x, ctx);
        } else if (tab->parsed()) {
            t = report::table(table_id, ctx);
        } else if (fig->parsed()) {
            t = report::figure(figure_id, ctx, figure_range);
        } else if (gb->parsed()) {
            t = report::goldbach_report(two_m, ctx);
        } else if (div->parsed()) {
            if (div_sweep) {
                t = report::divisibility_sweep_report(*div_sweep, ctx);
            } else if (div_n) {
                t = report::divisibility_report(*div_n, ctx);
            } else {
                std::cerr << "divisibility: give n or --sweep N\n";
                return 1;
            }
        } else if (gap->parsed()) {
            t = report::gapcheck_report(gap_x, ctx);
        } else if (cls->parsed()) {
            t = report::classify_report(two_n, ctx);
        } else if (unt->parsed()) {
            t = report::untouchable_report(z, ctx);
        } else if (quad->parsed()) {
            t = report::quadruplet_report(ctx);
        }

        std::cout << (format == "json" ? report::to_json(t, ctx) : report::to_csv(t, ctx));
        return t.violation ? 2 : 0;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return 1;
    }
}
