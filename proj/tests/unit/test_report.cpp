#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <set>

#include "qprime/report.hpp"

using namespace qprime;
using namespace qprime::report;

namespace {

std::int64_t as_int(const Cell& c) { return std::get<std::int64_t>(c); }
double as_real(const Cell& c) { return std::get<double>(c); }

const std::vector<Cell>& row_with(const Table& t, std::int64_t key) {
    for (const auto& r : t.rows) {
        if (as_int(r[0]) == key) return r;
    }
    throw std::runtime_error("row not found");
}

} // namespace

TEST_CASE("format_real uses six significant digits without exponents") {
    CHECK(format_real(2.293891) == "2.29389");
    CHECK(format_real(76725.39) == "76725.4");
    CHECK(format_real(5886.7834) == "5886.78");
    CHECK(format_real(100000.0) == "100000");
    CHECK(format_real(99999.96) == "100000");
    CHECK(format_real(1234567.8) == "1234568");
    CHECK(format_real(0.491312) == "0.49131"); // leading zero counts as a digit
    CHECK(format_real(-0.7714) == "-0.77140");
    CHECK(format_real(-0.0000001) == "0.00000");
    CHECK(format_real(10.0) == "10.0000");
}

TEST_CASE("csv output is self-describing and deterministic") {
    Context ctx;
    const auto a = to_csv(table("7.2", ctx), ctx);
    const auto b = to_csv(table("7.2", ctx), ctx);
    CHECK(a == b);
    CHECK(a.rfind("# table 7.2 a_prime=1.06000 band=squared mode=fit engine=oracle\n", 0) == 0);

    ctx.params.band = model::BandVariant::Printed;
    ctx.params.mode = model::ConstantMode::Unit;
    const auto c = to_csv(table("7.2", ctx), ctx);
    CHECK(c.find("band=printed mode=unit") != std::string::npos);
    CHECK(c.find("a_prime=1.09861") != std::string::npos);
}

TEST_CASE("json output parses and matches the csv rounding") {
    Context ctx;
    const auto t = table("5.3", ctx);
    const auto j = nlohmann::json::parse(to_json(t, ctx));
    CHECK(j["report"] == "table 5.3");
    CHECK(j["params"]["band"] == "squared");
    CHECK(j["rows"].size() == 6);
    CHECK(j["rows"][2][1].get<double>() == doctest::Approx(21.234));
    CHECK(j["rows"][2][4].get<std::int64_t>() == 20);
}

TEST_CASE("table 5.1") {
    const auto t = table("5.1", {});
    REQUIRE(t.rows.size() == 4);
    CHECK(as_int(row_with(t, 10)[1]) == 26);
    CHECK(as_int(row_with(t, 40)[5]) == 263);
    CHECK(as_int(row_with(t, 40)[4]) == 259);
}

TEST_CASE("table 5.2 observed counts and empty cells above the ceiling") {
    Context ctx;
    const auto t = table("5.2", ctx);
    CHECK(as_int(row_with(t, 100)[10]) == 23);
    ctx.sieve.ceiling = 1000000;
    const auto capped = table("5.2", ctx);
    CHECK(std::holds_alternative<std::monostate>(row_with(capped, 1000)[10]));
    CHECK(std::holds_alternative<std::int64_t>(row_with(capped, 100)[10]));
}

TEST_CASE("table 5.3 and 7.x content") {
    Context ctx;
    const auto t53 = table("5.3", ctx);
    CHECK(as_real(row_with(t53, 10000)[1]) == doctest::Approx(37.7494).epsilon(1e-5));
    const auto t72 = table("7.2", ctx);
    CHECK(as_real(row_with(t72, 10000)[1]) == doctest::Approx(66.2282).epsilon(1e-5));
    const auto t71 = table("7.1", ctx);
    const std::vector<std::int64_t> expected{122, 213, 502, 545, 829};
    for (std::size_t k = 0; k < 5; ++k) CHECK(as_int(t71.rows[k][1]) == expected[k]);
    CHECK_THROWS_AS(table("6.1", ctx), Error);
}

TEST_CASE("figure 9.1") {
    const auto t = figure("9.1", {});
    CHECK(as_int(t.rows.front()[0]) == 6);
    CHECK(as_int(t.rows.back()[0]) == 330);
    CHECK(as_int(row_with(t, 36)[1]) == 4);
    CHECK(as_int(row_with(t, 10)[1]) == 2);
    CHECK(std::holds_alternative<std::monostate>(row_with(t, 6)[2]));
}

TEST_CASE("figure 7.1 twin-free rows") {
    const auto t = figure("7.1", {});
    CHECK(t.rows.size() == 915);
    std::set<std::int64_t> zero;
    for (const auto& r : t.rows) {
        if (as_int(r[0]) <= 122 && as_int(r[1]) == 0) zero.insert(as_int(r[0]));
    }
    CHECK(zero == std::set<std::int64_t>{9, 19, 26, 27, 30, 34, 39, 49, 53, 77, 122});
}

TEST_CASE("figure 8.1 and 5.1") {
    const auto q = figure("8.1", {});
    CHECK(q.rows.size() == 30);
    CHECK(as_int(row_with(q, 10)[1]) == 1); // 13001, 13003, 13007, 13009
    CHECK(as_int(row_with(q, 14)[1]) == 1);
    CHECK(as_int(row_with(q, 25)[5]) == 96); // quadruplets <= 26^4

    const auto p = figure("5.1", {}, 20);
    CHECK(p.rows.size() == 20);
    CHECK(as_int(row_with(p, 1)[1]) == 2);
    CHECK_THROWS_AS(figure("2.2", {}), Error);
}

TEST_CASE("check reports") {
    Context ctx;
    CHECK_FALSE(gapcheck_report(1000000, ctx).violation);
    CHECK_FALSE(divisibility_sweep_report(1000, ctx).violation);
    const auto g = goldbach_report(10, ctx);
    CHECK(g.rows.size() == 2);
    CHECK(g.notes.front() == "count=2");

    ctx.engine = Engine::Exact;
    const auto pi = pi_report(122, ctx);
    CHECK(as_int(pi.rows[0][1]) == 92);
    CHECK(as_int(pi.rows[0][2]) == 30);
    try {
        pi_report(100000000, ctx);
        FAIL("expected cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ExactCapExceeded);
    }
}

TEST_CASE("quadruplet summary") {
    const auto s = quadruplet_summary();
    CHECK(s.last_single == 14);
    CHECK(s.below_914_squared == 147);
    CHECK(s.below_915_squared == 148);
    CHECK(s.target_start == 452539);
    CHECK(s.target_end == 463459);
    CHECK(s.biquadratic[9].quad_count == 1);
}
