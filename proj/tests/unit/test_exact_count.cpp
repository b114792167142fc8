#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "qprime/exact_count.hpp"
#include "qprime/sieve_oracle.hpp"

using namespace qprime;
using namespace qprime::exact;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("sigma_exact small values") {
    CHECK(sigma_exact(1) == 1);
    CHECK(sigma_exact(2) == 1);
    CHECK(sigma_exact(3) == 1);
    CHECK(sigma_exact(4) == 2);
    CHECK(sigma_exact(122) == 92);
    CHECK(sigma_exact(168) == 129);
    CHECK(pi_exact(1) == 0);
    CHECK(pi_exact(122) == 30);
    CHECK(pi_exact(168) == 39);
    CHECK(pi_exact(10000) == 1229);
    CHECK(pi_exact(10000000) == 664579);
}

TEST_CASE("sigma_exact input checks") {
    CHECK_THROWS_AS(sigma_exact(0), Error);
    try {
        sigma_exact(kExactCap + 1);
        FAIL("expected cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ExactCapExceeded);
    }
    ExactConfig wide;
    wide.cap = 20000000;
    CHECK(pi_exact(20000000, wide) == 1270607);
}

TEST_CASE("prime_basis") {
    CHECK(prime_basis(3).i0() == 0);
    CHECK(prime_basis(4).primes == std::vector<std::uint64_t>{2});
    const auto b = prime_basis(122);
    CHECK(b.i0() == 5);
    CHECK(b.primes.back() == 11);
    CHECK(small_primes().size() == 6542);
    CHECK(small_primes().back() == 65521);
}

TEST_CASE("pruned terms match unpruned enumeration for x <= 1000") {
    for (std::uint64_t x = 1; x <= 1000; ++x) {
        CHECK(static_cast<std::int64_t>(sigma_exact(x)) == oracles::unpruned_sigma(x));
    }
}

TEST_CASE("term enumeration respects the combination structure") {
    const std::uint64_t x = 5000;
    const auto basis = prime_basis(x);
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> per_ij;
    std::int64_t sum = 1;
    for_each_term(x, basis, [&](const CombinationTerm& t) {
        CHECK(t.product <= x);
        CHECK(t.product % basis.primes[t.i - 1] == 0);
        CHECK(t.sign == (t.j % 2 == 0 ? 1 : -1));
        ++per_ij[{t.i, t.j}];
        sum += t.sign * static_cast<std::int64_t>(x / t.product);
    });
    for (std::size_t i = 1; i <= basis.i0(); ++i) sum -= 1;
    CHECK(sum == static_cast<std::int64_t>(sigma_exact(x)));
    for (const auto& [ij, count] : per_ij) CHECK(count <= binom(ij.first - 1, ij.second));
    // with j = 0 every outer prime contributes exactly one term
    for (std::size_t i = 1; i <= basis.i0(); ++i) CHECK(per_ij[{i, 0}] == 1);
}

TEST_CASE("pi_exact equals the sieve on a sample up to the cap") {
    std::mt19937_64 rng(31337);
    for (int k = 0; k < 60; ++k) {
        const std::uint64_t x = 1 + rng() % kExactCap;
        CHECK(pi_exact(x) == oracle::pi_oracle(x));
    }
}

TEST_CASE("property: a larger basis gives the same count") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 200; ++k) {
        const std::uint64_t x = 4 + rng() % 200000;
        auto basis = prime_basis(x);
        const auto base_value = sigma_exact(x, basis);
        // extend with further primes, all still <= x
        const std::uint64_t extra = 1 + rng() % 30;
        for (std::uint64_t p : small_primes()) {
            if (p <= basis.primes.back()) continue;
            if (p > x || basis.i0() >= prime_basis(x).i0() + extra) break;
            basis.primes.push_back(p);
        }
        CHECK(sigma_exact(x, basis) == base_value);
    }
    PrimeBasis missing{{2, 5}};
    CHECK_THROWS_AS(sigma_exact(100, missing), Error);
    PrimeBasis too_big{{2, 3, 5, 7, 101}};
    CHECK_THROWS_AS(sigma_exact(100, too_big), Error);
}

TEST_CASE("delta_classify") {
    const auto v28 = delta_classify(28);
    CHECK(v28.sigma_2n == 19);
    CHECK(v28.sigma_2n1 == 19);
    CHECK(v28.delta == 0);
    CHECK(v28.delta2 == 1);
    CHECK(v28.twin);

    const auto v40 = delta_classify(40);
    CHECK(v40.sigma_2n == 28);
    CHECK(v40.sigma_2n1 == 28);
    CHECK(v40.sigma_2n3 == 29);
    CHECK(v40.twin);

    const auto v24 = delta_classify(24);
    CHECK(v24.delta == 1);
    CHECK_FALSE(v24.first_prime);
    CHECK_FALSE(v24.twin);

    CHECK_THROWS_AS(delta_classify(27), Error);
    CHECK_THROWS_AS(delta_classify(2), Error);

    for (std::uint64_t two_n = 4; two_n <= 3000; two_n += 2) {
        const auto v = delta_classify(two_n);
        CHECK(v.first_prime == oracles::trial_prime(two_n + 1));
        CHECK(v.second_prime == oracles::trial_prime(two_n + 3));
        CHECK(v.twin == (oracles::trial_prime(two_n + 1) && oracles::trial_prime(two_n + 3)));
    }
}

TEST_CASE("sigma_interval_exact") {
    CHECK(sigma_interval_exact(1) == 1);
    CHECK(sigma_interval_exact(5) == 9);
    CHECK(sigma_interval_exact(9) == 16);
    for (std::uint64_t n = 1; n <= 400; ++n) {
        const auto s = oracle::interval_stats(n, oracle::IntervalKind::Quadratic);
        CHECK(sigma_interval_exact(n) == s.width - s.prime_count);
    }
}

TEST_CASE("property: nested floor division") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200000; ++k) {
        const std::uint64_t a = rng() % 1000000001;
        const std::uint64_t b = 1 + rng() % 10000;
        const std::uint64_t c = 1 + rng() % 10000;
        CHECK(floor_div(floor_div(a, b), c) == floor_div(a, b * c));
        // [a/b] <= a/b < [a/b] + 1
        CHECK(floor_div(a, b) * b <= a);
        CHECK((floor_div(a, b) + 1) * b > a);
    }
    CHECK_THROWS_AS(floor_div(1, 0), Error);
}

TEST_CASE("property: signed reciprocal subset sums equal the product form") {
    for (std::size_t i = 1; i <= 12; ++i) {
        CHECK(std::abs(reciprocal_subset_sum(i, -1) - reciprocal_product(i, -1)) < 1e-12);
        CHECK(std::abs(reciprocal_subset_sum(i, +1) - reciprocal_product(i, +1)) < 1e-12);
    }
    CHECK(reciprocal_product(1, -1) == 1.0);
    CHECK(std::abs(reciprocal_product(3, -1) - (1.0 / 2.0) * (2.0 / 3.0)) < 1e-15);
}
