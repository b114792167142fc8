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

// report.hpp
// Tabular reports behind the command-line tool. Observed columns always
// come from the sieve; model columns from distribution_models. Each table
// carries its parameters in a header so a CSV file describes itself.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qprime/distribution_models.hpp"
#include "qprime/sieve_oracle.hpp"

namespace qprime::report {

// Empty, exact integer, model value, or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::string id;
    std::vector<std::string> notes; // extra "# ..." lines after the parameter line
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool violation = false; // set by check reports when an invariant fails
};

enum class Engine { Oracle, Exact };

const char* to_string(Engine e) noexcept;
Engine parse_engine(const std::string& s);

struct Context {
    model::ModelParams params;
    oracle::SieveConfig sieve;
    Engine engine = Engine::Oracle;
};

// Six significant digits in fixed notation, never exponent form.
std::string format_real(double v);

std::string format_cell(const Cell& c);

// "# table=<id> a_prime=<A'> band=<variant> mode=<mode> engine=<engine>"
std::string header_line(const Table& t, const Context& ctx);

std::string to_csv(const Table& t, const Context& ctx);
std::string to_json(const Table& t, const Context& ctx);

// Table ids: 5.1 5.2 5.3 7.1 7.2
std::vector<std::string> table_ids();
Table table(const std::string& id, const Context& ctx);

// Figure ids: 5.1 7.1 8.1 9.1. range is the last n (or 2m for 9.1).
std::vector<std::string> figure_ids();
std::uint64_t default_figure_range(const std::string& id);
Table figure(const std::string& id, const Context& ctx, std::optional<std::uint64_t> range = {});

Table pi_report(std::uint64_t x, const Context& ctx);
Table goldbach_report(std::uint64_t two_m, const Context& ctx);
Table divisibility_report(std::uint64_t n, const Context& ctx);
Table divisibility_sweep_report(std::uint64_t n_max, const Context& ctx);
Table gapcheck_report(std::uint64_t x, const Context& ctx);
Table classify_report(std::uint64_t two_n, const Context& ctx);
Table untouchable_report(std::uint64_t z, const Context& ctx);

// Largest n <= n_last whose quadratic interval holds exactly k twins, k = 0..k_max.
std::vector<std::optional<std::uint64_t>> last_twin_counts(std::uint64_t n_last, std::uint64_t k_max,
                                                          const oracle::SieveConfig& sieve = {});

struct QuadrupletSummary {
    std::vector<oracle::QuadIntervalStats> biquadratic; // n = 1..30
    std::optional<std::uint64_t> last_single;           // largest n <= 30 with exactly one
    std::uint64_t below_914_squared = 0;                // quadruplets with p+8 <= 914^2
    std::uint64_t below_915_squared = 0;
    std::uint64_t target_start = 0; // smallest x with exactly 96 quadruplets <= x
    std::uint64_t target_end = 0;   // first x past that range
};

QuadrupletSummary quadruplet_summary(std::uint64_t target = 96, const oracle::SieveConfig& sieve = {});
Table quadruplet_report(const Context& ctx);

} // namespace qprime::report
