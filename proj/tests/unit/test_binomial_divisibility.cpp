#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qprime/binomial_divisibility.hpp"

using namespace qprime;
using namespace qprime::divisibility;

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Cofactor from the binomial expansion of (L+1)^m - 1 or (M-1)^m + 1, no division.
mpz_class binomial_cofactor(std::uint64_t p, std::uint64_t m, Sign sign) {
    const mpz_class base = BinomialForm{p, sign}.value();
    mpz_class n = 0;
    for (std::uint64_t v = 0; v < m; ++v) {
        mpz_class term = binom(m, v) * pow_z(base, m - 1 - v);
        if (sign == Sign::Plus && v % 2 == 1) term = -term;
        n += term;
    }
    return n;
}

} // namespace

TEST_CASE("mersenne and fermat") {
    CHECK(mersenne(2) == 3);
    CHECK(mersenne(7) == 127);
    CHECK(mersenne(11) == 2047);
    CHECK(oracles::trial_prime(127));
    CHECK(2047 == 23 * 89);
    CHECK_FALSE(oracles::trial_prime(2047));
    CHECK_THROWS_AS(mersenne(1), Error);

    CHECK(fermat(0) == 3);
    CHECK(fermat(1) == 5);
    CHECK(fermat(2) == 17);
    CHECK(fermat(3) == 257);
    CHECK(fermat(4) == 65537);
    CHECK(mpz_divisible_ui_p(fermat(5).get_mpz_t(), 641) != 0);
    CHECK(pow2_mod(32, 641) == 640);
    CHECK_THROWS_AS(fermat(31), Error);
}

TEST_CASE("pow2_mod agrees with GMP") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 2000; ++k) {
        const std::uint64_t e = rng() % 100000;
        const std::uint64_t m = 1 + rng() % ((std::uint64_t{1} << 62) - 1);
        mpz_class r;
        const mpz_class mm(std::to_string(m));
        const mpz_class two = 2;
        mpz_powm_ui(r.get_mpz_t(), two.get_mpz_t(), e, mm.get_mpz_t());
        CHECK(r == mpz_class(std::to_string(pow2_mod(e, m))));
    }
}

TEST_CASE("odd_prime_congruences") {
    const auto c3 = odd_prime_congruences(3);
    CHECK(c3.m == 1);
    CHECK(c3.minus_is_1_mod_3);
    CHECK(c3.plus_is_0_mod_3);
    CHECK(odd_prime_congruences(5).m == 3);
    CHECK(odd_prime_congruences(13).minus_is_1_mod_3);
    for (std::uint64_t p = 3; p < 400; p += 2) {
        if (!oracles::trial_prime(p)) {
            CHECK_THROWS_AS(odd_prime_congruences(p), Error);
            continue;
        }
        const auto c = odd_prime_congruences(p);
        CHECK(c.m == c.m_from_binomials);
        CHECK(2 * (p * c.m) + 2 == mersenne(p) + 1);
        CHECK(c.minus_is_1_mod_3);
        CHECK(c.plus_is_0_mod_3);
    }
    CHECK_THROWS_AS(odd_prime_congruences(2), Error);
}

TEST_CASE("power_divisor") {
    const auto a = power_divisor(3, 3, Sign::Minus);
    CHECK(a.divisor == 7);
    CHECK(a.value == 511);
    CHECK(a.cofactor == 73);

    const auto b = power_divisor(3, 11, Sign::Plus);
    CHECK(b.divisor == 9);
    CHECK(valuation(b.value, 3) == 2);

    const auto c = power_divisor(2, 3, Sign::Minus);
    CHECK(c.divisor == 3);
    CHECK(c.value == 63);

    CHECK_THROWS_AS(power_divisor(2, 3, Sign::Plus), Error);
    CHECK_THROWS_AS(power_divisor(3, 4, Sign::Minus), Error);
    CHECK_THROWS_AS(power_divisor(3, 1, Sign::Minus), Error);
    CHECK_THROWS_AS(power_divisor(9, 3, Sign::Minus), Error);

    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (std::uint64_t m = 3; m <= 21; m += 2) {
            for (auto s : {Sign::Minus, Sign::Plus}) {
                if (s == Sign::Plus && p == 2) continue;
                const auto d = power_divisor(p, m, s);
                CHECK(d.cofactor > 1);
                CHECK(d.cofactor == binomial_cofactor(p, m, s));
            }
        }
    }
}

TEST_CASE("exponent factor report on 2^33 + 1") {
    const auto r = exponent_factor_report(33, Sign::Plus);
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].prime == 3);
    CHECK(r.factors[0].divides);
    CHECK(r.factors[1].prime == 11);
    CHECK(r.factors[1].divides);
    CHECK(r.product == 9 * 2049);
    CHECK_FALSE(r.product_divides);
    CHECK(valuation(r.value, 3) == 2);
    CHECK(r.value == mpz_class(9) * 67 * 683 * 20857);

    const auto coprime = exponent_factor_report(35, Sign::Minus);
    CHECK(coprime.product_divides);
}

TEST_CASE("fermat_structure") {
    const auto a = fermat_structure(1, 2);
    CHECK(a.fermat_divides_plus);
    CHECK(a.cofactor == 1);

    const auto b = fermat_structure(3, 1);
    CHECK(b.cofactor == 13);
    CHECK(b.lower_fermats_divide_minus);

    const auto c = fermat_structure(3, 2);
    CHECK(c.mersenne_part_divides);
    CHECK(c.lower_fermats_divide_minus);

    for (std::uint64_t m = 1; m <= 31; m += 2) {
        for (unsigned i = 1; i <= 8; ++i) {
            const auto s = fermat_structure(m, i);
            CHECK(s.lower_fermats_divide_minus);
            CHECK(s.mersenne_part_divides);
            CHECK(s.fermat_divides_plus);
            CHECK((s.cofactor == 1) == (m == 1));
            CHECK(s.three_divides_plus_m);
            CHECK(s.even_split_holds);
        }
    }
    CHECK_THROWS_AS(fermat_structure(4, 1), Error);
    CHECK_THROWS_AS(fermat_structure(3, 0), Error);
}

TEST_CASE("even exponent split and divisibility by 3") {
    for (std::uint64_t g = 2; g <= 200; g += 2) {
        const mpz_class lhs = mersenne(g);
        const mpz_class h = BinomialForm{g / 2, Sign::Plus}.value() * BinomialForm{g / 2, Sign::Minus}.value();
        CHECK(lhs == h);
        CHECK(mpz_divisible_ui_p(lhs.get_mpz_t(), 3) != 0);
    }
}

TEST_CASE("fermat coprimality and product identity") {
    CHECK(fermat_coprime(2, 0));
    for (unsigned i = 1; i <= 14; ++i) {
        for (unsigned j = 0; j < i; ++j) CHECK(fermat_coprime(i, j));
    }
    CHECK_THROWS_AS(fermat_coprime(15, 0), Error);
    CHECK_THROWS_AS(fermat_coprime(3, 3), Error);
    for (unsigned i = 1; i <= 12; ++i) CHECK(fermat_product_identity(i));
    CHECK(mpz_class(3 * 5 * 17) == fermat(3) - 2);
}

TEST_CASE("clause_verdict") {
    const auto v11 = clause_verdict(11);
    CHECK(v11.clause == Clause::Prime3Mod4);
    CHECK(v11.divides_minus);
    CHECK(mpz_divisible_ui_p(mersenne(11).get_mpz_t(), 23) != 0);

    const auto v5 = clause_verdict(5);
    CHECK(v5.clause == Clause::Prime1Mod4);
    CHECK(v5.divides_plus);

    const auto v8 = clause_verdict(8);
    CHECK(v8.clause == Clause::Mod4Zero);
    CHECK(v8.divides_minus);

    const auto v6 = clause_verdict(6);
    CHECK(v6.clause == Clause::Mod4Two);
    CHECK(v6.divides_plus);

    const auto v9 = clause_verdict(9); // 19 prime, 9 odd composite
    CHECK(v9.clause == Clause::OutOfScope);
    CHECK(v9.claim_holds);
    REQUIRE(v9.absorber);
    CHECK(v9.absorber->q == 3);

    try {
        clause_verdict(7); // 15 composite
        FAIL("expected NotApplicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotApplicable);
    }
    CHECK_THROWS_AS(clause_verdict(1), Error);
}

TEST_CASE("clause verdicts against exact arithmetic for small n") {
    for (std::uint64_t n = 2; n <= 400; ++n) {
        if (!oracles::trial_prime(2 * n + 1)) continue;
        const auto v = clause_verdict(n);
        const mpz_class pp = static_cast<unsigned long>(2 * n + 1);
        CHECK(v.divides_minus == (mpz_divisible_p(mersenne(n).get_mpz_t(), pp.get_mpz_t()) != 0));
        CHECK(v.divides_plus ==
              (mpz_divisible_p(BinomialForm{n, Sign::Plus}.value().get_mpz_t(), pp.get_mpz_t()) != 0));
        CHECK(v.divides_minus != v.divides_plus);
        CHECK(v.claim_holds);
    }
}

TEST_CASE("clause_sweep finds no violations") {
    const auto s = clause_sweep(100000);
    CHECK(s.violations.empty());
    CHECK(s.applicable > 0);
    std::uint64_t total = 0;
    for (auto c : s.per_clause) total += c;
    CHECK(total == s.applicable);
}

TEST_CASE("property: parity of sums and products") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100000; ++k) {
        const std::uint64_t a = 1 + rng() % 1000000000;
        const std::uint64_t b = 1 + rng() % 1000000000;
        CHECK(((a + b) % 2 == 1) == ((a % 2) != (b % 2)));
        CHECK(((a * b) % 2 == 1) == (a % 2 == 1 && b % 2 == 1));
    }
}

TEST_CASE("property: binomial symmetry and halving") {
    for (unsigned long m = 1; m <= 40; ++m) {
        mpz_class total = 0;
        for (unsigned long v = 0; v <= m; ++v) {
            CHECK(binom(m, v) == binom(m, m - v));
            total += binom(m, v);
        }
        CHECK(total == pow_z(2, m));
        if (m % 2 == 1) {
            // odd m: the two halves of the row are equal, each 2^(m-1)
            mpz_class half = 0;
            for (unsigned long v = 0; v <= (m - 1) / 2; ++v) half += binom(m, v);
            CHECK(half == pow_z(2, m - 1));
        }
    }
}
