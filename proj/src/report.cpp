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

#include "qprime/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "qprime/binomial_divisibility.hpp"
#include "qprime/exact_count.hpp"

namespace qprime::report {

namespace {

using oracle::IntervalKind;

Cell I(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell B(bool v) { return std::string(v ? "true" : "false"); }
Cell D(double v) { return v; }

// Observed interval statistics, or nothing when the interval lies above the ceiling.
std::optional<oracle::QuadIntervalStats> observed(std::uint64_t n, IntervalKind kind,
                                                  const oracle::SieveConfig& sieve) {
    try {
        return oracle::interval_stats(n, kind, sieve);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RangeTooLarge) return std::nullopt;
        throw;
    }
}

constexpr std::array<std::uint64_t, 4> kT51N{10, 20, 30, 40};
constexpr std::array<std::uint64_t, 4> kT51Model{26, 80, 161, 266};
constexpr std::array<std::uint64_t, 4> kT51Real{30, 85, 162, 263};

constexpr std::array<std::uint64_t, 10> kT52N{1, 10, 100, 150, 300, 400, 1000, 10000, 100000, 1000000};
constexpr std::array<double, 10> kT52Mean{2.29, 4.4, 23.1, 31.9, 55.8, 70.8, 154, 1151, 9207, 76725.4};
constexpr std::array<double, 10> kT52L{0.86, 10.2, 37.9, 44.8, 58.0, 64.0, 85.0, 151.0, 235.9, 339.7};
constexpr std::array<double, 10> kT52Scatter{3.5, 2.05, 5.30, 6.72, 10.4, 12.5, 23.6, 132.5, 847.7, 5886.9};

constexpr std::array<std::uint64_t, 6> kT53X{10, 100, 1000, 10000, 100000, 840000};
constexpr std::array<std::uint64_t, 6> kT53Gap{4, 14, 20, 36, 54, 100};
constexpr std::array<double, 6> kT53Model{2.36, 9.44, 21.23, 37.75, 58.98, 82.81};

constexpr std::array<std::uint64_t, 5> kT71N{122, 213, 502, 545, 829};
constexpr std::array<double, 5> kT71Model{3.19, 4.47, 7.84, 8.29, 11.09};
constexpr std::uint64_t kT71Scan = 915;

constexpr std::array<std::uint64_t, 7> kT72N{1, 10, 100, 1000, 10000, 100000, 1000000};
constexpr std::array<double, 7> kT72Mean{1.75, 1.03, 2.65, 11.78, 66.23, 423.85, 2943.39};
constexpr std::array<double, 7> kT72Upper{11.19, 2.14, 4.01, 15.68, 82.32, 505.23, 3411.39};
constexpr std::array<double, 7> kT72Lower{0.49, 0.32, 1.57, 8.45, 51.86, 349.25, 2510.71};

Table table_5_1(const Context& ctx) {
    Table t;
    t.id = "table 5.1";
    t.notes.push_back("model: per-interval floor of (2n+1)*prod_{p<=prec(n)}(1-1/p), summed over 2 <= n <= n0");
    t.notes.push_back("model_next_basis: same with p <= prec(n+1), summed over 1 <= n <= n0");
    t.columns = {"n0", "model", "printed_model", "delta_model", "model_next_basis",
                 "observed", "printed_observed", "delta_observed"};
    for (std::size_t k = 0; k < kT51N.size(); ++k) {
        const std::uint64_t n0 = kT51N[k];
        const auto model = model::pi_model_cumulative(n0, model::table_convention());
        const auto alt = model::pi_model_cumulative(n0, {});
        const auto real = oracle::pi_oracle((n0 + 1) * (n0 + 1), ctx.sieve);
        t.rows.push_back({I(n0), I(model), I(kT51Model[k]),
                          I(model > kT51Model[k] ? model - kT51Model[k] : kT51Model[k] - model), I(alt),
                          I(real), I(kT51Real[k]),
                          I(real > kT51Real[k] ? real - kT51Real[k] : kT51Real[k] - real)});
    }
    return t;
}

Table table_5_2(const Context& ctx) {
    Table t;
    t.id = "table 5.2";
    t.notes.push_back("pair_spacing = 2 ln^2(n+1) / A'^2; scatter = (2n+1) / pair_spacing");
    t.columns = {"n", "mean", "printed_mean", "delta_mean", "pair_spacing", "printed_pair_spacing",
                 "delta_pair_spacing", "scatter", "printed_scatter", "delta_scatter", "observed"};
    for (std::size_t k = 0; k < kT52N.size(); ++k) {
        const auto pb = model::prime_band(kT52N[k], ctx.params);
        const auto obs = observed(kT52N[k], IntervalKind::Quadratic, ctx.sieve);
        t.rows.push_back({I(kT52N[k]), D(pb.band.mean), D(kT52Mean[k]), D(std::abs(pb.band.mean - kT52Mean[k])),
                          D(pb.pair_spacing), D(kT52L[k]), D(std::abs(pb.pair_spacing - kT52L[k])),
                          D(pb.scatter), D(kT52Scatter[k]), D(std::abs(pb.scatter - kT52Scatter[k])),
                          obs ? I(obs->prime_count) : Cell{}});
    }
    return t;
}

Table table_5_3(const Context& ctx) {
    Table t;
    t.id = "table 5.3";
    t.notes.push_back("observed: largest gap between consecutive primes <= x (first occurrence)");
    t.columns = {"x", "model", "printed_model", "delta_model", "observed_gap", "gap_lower", "gap_upper",
                 "printed_gap", "delta_gap"};
    for (std::size_t k = 0; k < kT53X.size(); ++k) {
        const double m = model::max_gap_model(kT53X[k], ctx.params);
        Cell gap, lo, hi, dg;
        if (kT53X[k] < ctx.sieve.ceiling) {
            const auto g = oracle::max_gap_up_to(kT53X[k], ctx.sieve);
            gap = I(g.gap);
            lo = I(g.lower);
            hi = I(g.upper);
            dg = I(g.gap > kT53Gap[k] ? g.gap - kT53Gap[k] : kT53Gap[k] - g.gap);
        }
        t.rows.push_back({I(kT53X[k]), D(m), D(kT53Model[k]), D(std::abs(m - kT53Model[k])), gap, lo, hi,
                          I(kT53Gap[k]), dg});
    }
    return t;
}

Table table_7_1(const Context& ctx) {
    Table t;
    t.id = "table 7.1";
    t.notes.push_back("observed: largest n <= " + std::to_string(kT71Scan) +
                      " whose interval holds exactly k twins");
    t.notes.push_back("model: twin mean at n_max with A' = ln 3 (mode unit), regardless of --mode");
    t.columns = {"k", "n_max", "printed_n_max", "model", "printed_model", "delta_model"};
    auto unit = ctx.params;
    unit.mode = model::ConstantMode::Unit;
    const auto last = last_twin_counts(kT71Scan, kT71N.size() - 1, ctx.sieve);
    for (std::size_t k = 0; k < kT71N.size(); ++k) {
        const double m = model::twin_model(kT71N[k], unit).mean;
        t.rows.push_back({I(k), last[k] ? I(*last[k]) : Cell{}, I(kT71N[k]), D(m), D(kT71Model[k]),
                          D(std::abs(m - kT71Model[k]))});
    }
    return t;
}

Table table_7_2(const Context& ctx) {
    Table t;
    t.id = "table 7.2";
    t.columns = {"n", "mean", "printed_mean", "delta_mean", "upper", "printed_upper", "delta_upper",
                 "lower", "printed_lower", "delta_lower", "observed"};
    for (std::size_t k = 0; k < kT72N.size(); ++k) {
        const auto b = model::twin_model(kT72N[k], ctx.params);
        const auto obs = observed(kT72N[k], IntervalKind::Quadratic, ctx.sieve);
        t.rows.push_back({I(kT72N[k]), D(b.mean), D(kT72Mean[k]), D(std::abs(b.mean - kT72Mean[k])),
                          D(b.upper), D(kT72Upper[k]), D(std::abs(b.upper - kT72Upper[k])), D(b.lower),
                          D(kT72Lower[k]), D(std::abs(b.lower - kT72Lower[k])),
                          obs ? I(obs->twin_count) : Cell{}});
    }
    return t;
}

} // namespace

const char* to_string(Engine e) noexcept { return e == Engine::Oracle ? "oracle" : "exact"; }

Engine parse_engine(const std::string& s) {
    if (s == "oracle") return Engine::Oracle;
    if (s == "exact") return Engine::Exact;
    throw Error(ErrorKind::InvalidArgument, "unknown engine '" + s + "'");
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    const double a = std::abs(v);
    int before = a >= 1.0 ? static_cast<int>(std::floor(std::log10(a))) + 1 : 1;
    // log10 can land just below an exact power of ten.
    if (a >= 1.0 && a >= std::pow(10.0, before)) ++before;
    int decimals = std::max(0, 6 - before);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    // Rounding can carry into a new leading digit (99999.96 -> 100000.0).
    if (decimals > 0 && std::abs(std::strtod(buf, nullptr)) >= std::pow(10.0, before)) {
        --decimals;
        std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    }
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_real(v);
            } else {
                return v;
            }
        },
        c);
}

std::string header_line(const Table& t, const Context& ctx) {
    std::ostringstream os;
    os << "# " << t.id << " a_prime=" << format_real(ctx.params.effective_a_prime())
       << " band=" << model::to_string(ctx.params.band) << " mode=" << model::to_string(ctx.params.mode)
       << " engine=" << to_string(ctx.engine);
    if (ctx.params.exact_prec) os << " log=exact-prec";
    return os.str();
}

std::string to_csv(const Table& t, const Context& ctx) {
    std::ostringstream os;
    os << header_line(t, ctx) << '\n';
    for (const auto& note : t.notes) os << "# " << note << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Table& t, const Context& ctx) {
    nlohmann::ordered_json j;
    j["report"] = t.id;
    j["params"] = {{"a_prime", ctx.params.effective_a_prime()},
                   {"band", model::to_string(ctx.params.band)},
                   {"mode", model::to_string(ctx.params.mode)},
                   {"engine", to_string(ctx.engine)},
                   {"exact_prec", ctx.params.exact_prec}};
    j["notes"] = t.notes;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        r.push_back(nullptr);
                    } else if constexpr (std::is_same_v<T, double>) {
                        // Same rounding as the CSV so both outputs agree digit for digit.
                        r.push_back(std::stod(format_real(v)));
                    } else {
                        r.push_back(v);
                    }
                },
                c);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (t.violation) j["violation"] = true;
    return j.dump(2) + "\n";
}

std::vector<std::string> table_ids() { return {"5.1", "5.2", "5.3", "7.1", "7.2"}; }

Table table(const std::string& id, const Context& ctx) {
    if (id == "5.1") return table_5_1(ctx);
    if (id == "5.2") return table_5_2(ctx);
    if (id == "5.3") return table_5_3(ctx);
    if (id == "7.1") return table_7_1(ctx);
    if (id == "7.2") return table_7_2(ctx);
    throw Error(ErrorKind::InvalidArgument, "unknown table '" + id + "'");
}

// p+8 for every quadruplet (p, p+2, p+6, p+8) with p+8 < limit, ascending.
static std::vector<std::uint64_t> quadruplet_tops(std::uint64_t limit, const oracle::SieveConfig& sieve) {
    std::vector<std::uint64_t> tops;
    std::array<std::uint64_t, 4> w{};
    std::uint64_t seen = 0;
    oracle::for_each_prime(0, limit, sieve, [&](std::uint64_t p) {
        w = {w[1], w[2], w[3], p};
        if (++seen >= 4 && w[1] - w[0] == 2 && w[2] - w[1] == 4 && w[3] - w[2] == 2) tops.push_back(p);
    });
    return tops;
}

std::vector<std::string> figure_ids() { return {"5.1", "7.1", "8.1", "9.1"}; }

std::uint64_t default_figure_range(const std::string& id) {
    if (id == "5.1") return 240;
    if (id == "7.1") return 915;
    if (id == "8.1") return 30;
    if (id == "9.1") return 330;
    throw Error(ErrorKind::InvalidArgument, "unknown figure '" + id + "'");
}

Table figure(const std::string& id, const Context& ctx, std::optional<std::uint64_t> range) {
    const std::uint64_t last = range.value_or(default_figure_range(id));
    Table t;
    t.id = "figure " + id;
    if (id == "5.1" || id == "7.1") {
        if (last < 1) throw Error(ErrorKind::InvalidArgument, "figure range must be >= 1");
        const bool twins = id == "7.1";
        t.notes.push_back(twins ? "observed: twin pairs (p, p+2) with p in (n^2, (n+1)^2]"
                                : "observed: primes in (n^2, (n+1)^2]");
        t.columns = {"n", "observed", "mean", "lower", "upper"};
        const auto stats = oracle::interval_sweep(1, last, IntervalKind::Quadratic, ctx.sieve);
        for (const auto& s : stats) {
            const auto b = twins ? model::twin_model(s.n, ctx.params) : model::prime_band(s.n, ctx.params).band;
            t.rows.push_back({I(s.n), I(twins ? s.twin_count : s.prime_count), D(b.mean), D(b.lower), D(b.upper)});
        }
        return t;
    }
    if (id == "8.1") {
        if (last < 1) throw Error(ErrorKind::InvalidArgument, "figure range must be >= 1");
        t.notes.push_back("observed: quadruplets (p, p+2, p+6, p+8) inside (n^4, (n+1)^4]");
        t.notes.push_back("cumulative columns count quadruplets <= (n+1)^4");
        t.columns = {"n", "observed", "mean", "lower", "upper", "cumulative_observed", "cumulative_mean"};
        const auto stats = oracle::interval_sweep(1, last, IntervalKind::Biquadratic, ctx.sieve);
        // Straddlers such as 11,13,17,19 across 16 belong to no interval but still count here.
        const auto tops = quadruplet_tops(stats.empty() ? 0 : oracle::interval_bounds(last, IntervalKind::Biquadratic).hi + 1,
                                          ctx.sieve);
        double cum_model = 0;
        for (const auto& s : stats) {
            const double m = model::quad_model(s.n, ctx.params);
            const auto hi = oracle::interval_bounds(s.n, IntervalKind::Biquadratic).hi;
            const auto cum = static_cast<std::uint64_t>(std::upper_bound(tops.begin(), tops.end(), hi) - tops.begin());
            cum_model += m;
            t.rows.push_back({I(s.n), I(s.quad_count), D(m), Cell{}, Cell{}, I(cum), D(cum_model)});
        }
        return t;
    }
    if (id == "9.1") {
        if (last < 6) throw Error(ErrorKind::InvalidArgument, "figure 9.1 range must be >= 6");
        t.notes.push_back("observed: unordered odd-prime pairs p <= q with p + q = 2m");
        t.columns = {"two_m", "observed", "mean", "lower", "upper"};
        const auto seg = oracle::sieve_range(0, last + 1, ctx.sieve);
        for (std::uint64_t two_m = 6; two_m <= last; two_m += 2) {
            std::uint64_t count = 0;
            for (std::uint64_t p = 3; p <= two_m / 2; p += 2) {
                if (seg.is_prime(p) && seg.is_prime(two_m - p)) ++count;
            }
            if (two_m < 8) {
                t.rows.push_back({I(two_m), I(count), Cell{}, Cell{}, Cell{}});
                continue;
            }
            const auto b = model::goldbach_model(two_m, ctx.params);
            t.rows.push_back({I(two_m), I(count), D(b.mean), D(b.lower), D(b.upper)});
        }
        return t;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown figure '" + id + "'");
}

Table pi_report(std::uint64_t x, const Context& ctx) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, "pi requires x >= 1");
    Table t;
    t.id = "pi";
    t.columns = {"x", "sigma", "pi", "engine", "elapsed_ms"};
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t pi = 0;
    if (ctx.engine == Engine::Exact) {
        pi = exact::pi_exact(x);
    } else {
        pi = oracle::pi_oracle(x, ctx.sieve);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    t.rows.push_back({I(x), I(x - pi), I(pi), std::string(to_string(ctx.engine)), D(ms)});
    return t;
}

Table goldbach_report(std::uint64_t two_m, const Context& ctx) {
    const auto g = oracle::goldbach_count_oracle(two_m, ctx.sieve);
    Table t;
    t.id = "goldbach";
    t.notes.push_back("count=" + std::to_string(g.count));
    if (two_m >= 8) {
        const auto b = model::goldbach_model(two_m, ctx.params);
        t.notes.push_back("model mean=" + format_real(b.mean) + " lower=" + format_real(b.lower) +
                          " upper=" + format_real(b.upper));
    }
    t.columns = {"two_m", "p", "q"};
    for (const auto& w : g.witnesses) t.rows.push_back({I(w.sum), I(w.p), I(w.q)});
    t.violation = g.count == 0;
    return t;
}

Table divisibility_report(std::uint64_t n, const Context&) {
    const auto v = divisibility::clause_verdict(n);
    Table t;
    t.id = "divisibility";
    t.columns = {"n", "p_prime", "clause", "residue", "divides_minus", "divides_plus", "claim_holds",
                 "absorber_q", "absorber_in_binomial"};
    t.rows.push_back({I(v.n), I(v.p_prime), std::string(divisibility::to_string(v.clause)), I(v.residue),
                      B(v.divides_minus), B(v.divides_plus), B(v.claim_holds),
                      v.absorber ? I(v.absorber->q) : Cell{},
                      v.absorber ? B(v.absorber->in_binomial) : Cell{}});
    t.violation = !v.claim_holds;
    return t;
}

Table divisibility_sweep_report(std::uint64_t n_max, const Context&) {
    const auto s = divisibility::clause_sweep(n_max);
    Table t;
    t.id = "divisibility sweep";
    t.notes.push_back("n_max=" + std::to_string(n_max) + " applicable=" + std::to_string(s.applicable));
    t.notes.push_back("violations=" + std::to_string(s.violations.size()));
    t.columns = {"clause", "count"};
    using divisibility::Clause;
    for (auto c : {Clause::Mod4Zero, Clause::Prime3Mod4, Clause::Prime1Mod4, Clause::Mod4Two, Clause::OutOfScope}) {
        t.rows.push_back({std::string(divisibility::to_string(c)), I(s.per_clause[static_cast<std::size_t>(c)])});
    }
    for (auto n : s.violations) t.rows.push_back({std::string("violation"), I(n)});
    t.violation = !s.violations.empty();
    return t;
}

Table gapcheck_report(std::uint64_t x, const Context& ctx) {
    const auto violations = oracle::gap_bound_check(x, ctx.sieve);
    const auto g = oracle::max_gap_up_to(x, ctx.sieve);
    Table t;
    t.id = "gapcheck";
    t.notes.push_back("violations=" + std::to_string(violations.size()));
    t.columns = {"x", "violations", "max_gap", "gap_lower", "gap_upper", "model"};
    t.rows.push_back({I(x), I(violations.size()), I(g.gap), I(g.lower), I(g.upper),
                      D(model::max_gap_model(x, ctx.params))});
    for (const auto& v : violations) t.rows.push_back({Cell{}, std::string("violation"), I(v.gap), I(v.lower), I(v.upper), Cell{}});
    t.violation = !violations.empty();
    return t;
}

Table classify_report(std::uint64_t two_n, const Context&) {
    const auto v = exact::delta_classify(two_n);
    Table t;
    t.id = "classify";
    t.columns = {"two_n", "sigma_2n", "sigma_2n1", "sigma_2n3", "delta", "delta2", "first_prime",
                 "second_prime", "twin"};
    t.rows.push_back({I(v.two_n), I(v.sigma_2n), I(v.sigma_2n1), I(v.sigma_2n3), I(v.delta), I(v.delta2),
                      B(v.first_prime), B(v.second_prime), B(v.twin)});
    return t;
}

Table untouchable_report(std::uint64_t z, const Context&) {
    const auto w = oracle::untouchable_witness(z);
    Table t;
    t.id = "untouchable";
    t.columns = {"z", "x", "divisor_sum", "p", "q"};
    if (w) {
        t.rows.push_back({I(z), I(w->x), I(w->divisor_sum), w->p ? I(w->p) : Cell{}, w->q ? I(w->q) : Cell{}});
    } else {
        t.notes.push_back("no witness: " + std::to_string(z) + " is untouchable");
        t.rows.push_back({I(z), Cell{}, Cell{}, Cell{}, Cell{}});
    }
    return t;
}

std::vector<std::optional<std::uint64_t>> last_twin_counts(std::uint64_t n_last, std::uint64_t k_max,
                                                          const oracle::SieveConfig& sieve) {
    std::vector<std::optional<std::uint64_t>> last(k_max + 1);
    for (const auto& s : oracle::interval_sweep(1, n_last, IntervalKind::Quadratic, sieve)) {
        if (s.twin_count <= k_max) last[s.twin_count] = s.n;
    }
    return last;
}

QuadrupletSummary quadruplet_summary(std::uint64_t target, const oracle::SieveConfig& sieve) {
    QuadrupletSummary out;
    out.biquadratic = oracle::interval_sweep(1, 30, IntervalKind::Biquadratic, sieve);
    for (const auto& s : out.biquadratic) {
        if (s.quad_count == 1) out.last_single = s.n;
    }

    // Largest members of all quadruplets, ascending, until the (target+1)-th is known.
    std::vector<std::uint64_t> tops;
    std::uint64_t limit = 1U << 20;
    for (;;) {
        tops = quadruplet_tops(limit, sieve);
        if (tops.size() > target && limit > 915 * 915) break;
        limit *= 2;
    }
    for (std::uint64_t top : tops) {
        if (top <= 914 * 914) ++out.below_914_squared;
        if (top <= 915 * 915) ++out.below_915_squared;
    }
    if (target == 0) {
        out.target_start = 0;
    } else {
        out.target_start = tops[target - 1];
    }
    out.target_end = tops[target];
    return out;
}

Table quadruplet_report(const Context& ctx) {
    const auto s = quadruplet_summary(96, ctx.sieve);
    Table t;
    t.id = "quadruplets";
    t.notes.push_back("quadruplet (p, p+2, p+6, p+8); counted <= x when p+8 <= x");
    t.notes.push_back("cumulative counts quadruplets <= (n+1)^4, straddlers included");
    t.notes.push_back("below 914^2: " + std::to_string(s.below_914_squared) +
                      "; below 915^2: " + std::to_string(s.below_915_squared));
    t.notes.push_back("exactly 96 quadruplets <= x for " + std::to_string(s.target_start) +
                      " <= x < " + std::to_string(s.target_end));
    t.notes.push_back(s.last_single ? "last n <= 30 with exactly one: " + std::to_string(*s.last_single)
                                    : std::string("no n <= 30 with exactly one"));
    t.columns = {"n", "interval_count", "cumulative"};
    const auto tops = quadruplet_tops(oracle::interval_bounds(30, IntervalKind::Biquadratic).hi + 1, ctx.sieve);
    for (const auto& q : s.biquadratic) {
        const auto hi = oracle::interval_bounds(q.n, IntervalKind::Biquadratic).hi;
        const auto cum = std::upper_bound(tops.begin(), tops.end(), hi) - tops.begin();
        t.rows.push_back({I(q.n), I(q.quad_count), I(static_cast<std::uint64_t>(cum))});
    }
    return t;
}

} // namespace qprime::report
