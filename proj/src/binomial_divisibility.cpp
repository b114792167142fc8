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

#include "qprime/binomial_divisibility.hpp"

#include <string>

namespace qprime::divisibility {

namespace {

bool prime64(std::uint64_t k) {
    if (k < 2) return false;
    if (k % 2 == 0) return k == 2;
    for (std::uint64_t d = 3; d <= k / d; d += 2) {
        if (k % d == 0) return false;
    }
    return true;
}

mpz_class pow2(std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class binomial_value(std::uint64_t e, Sign s) {
    mpz_class v = pow2(e);
    if (s == Sign::Plus) return v + 1;
    return v - 1;
}

bool divides(const mpz_class& d, const mpz_class& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::uint64_t smallest_factor(std::uint64_t n) {
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) return d;
    }
    return n;
}

} // namespace

const char* to_string(Sign s) noexcept { return s == Sign::Plus ? "plus" : "minus"; }

const char* to_string(Clause c) noexcept {
    switch (c) {
    case Clause::Mod4Zero: return "mod4_0";
    case Clause::Prime3Mod4: return "prime_3mod4";
    case Clause::Prime1Mod4: return "prime_1mod4";
    case Clause::Mod4Two: return "mod4_2";
    case Clause::OutOfScope: return "out_of_scope";
    }
    return "unknown";
}

mpz_class BinomialForm::value() const {
    if (exponent < 1) throw Error(ErrorKind::InvalidArgument, "exponent must be >= 1");
    return binomial_value(exponent, sign);
}

std::uint64_t pow2_mod(std::uint64_t e, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 base = 2 % m;
    while (e > 0) {
        if (e & 1U) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

mpz_class mersenne(std::uint64_t p) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "mersenne requires p >= 2");
    return pow2(p) - 1;
}

mpz_class fermat(unsigned i) {
    if (i > 30) throw Error(ErrorKind::RangeTooLarge, "fermat index above 30");
    return pow2(std::uint64_t{1} << i) + 1;
}

unsigned valuation(const mpz_class& v, unsigned long q) {
    if (v == 0 || q < 2) throw Error(ErrorKind::InvalidArgument, "valuation needs v != 0 and q >= 2");
    mpz_class rest = v;
    unsigned k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
        ++k;
    }
    return k;
}

OddPrimeCongruences odd_prime_congruences(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !prime64(p)) {
        throw Error(ErrorKind::InvalidArgument, "odd_prime_congruences requires an odd prime");
    }
    OddPrimeCongruences out;
    out.p = p;
    const mpz_class half = pow2(p - 1) - 1; // (2^p - 2) / 2
    if (!divides(mpz_class(static_cast<unsigned long>(p)), half)) {
        throw Error(ErrorKind::InvalidArgument, "p does not divide 2^(p-1) - 1");
    }
    out.m = half / static_cast<unsigned long>(p);

    // 2^p - 2 = sum_{v=1}^{p-1} C(p, v); by symmetry half of it is the sum up to (p-1)/2.
    mpz_class c;
    for (std::uint64_t v = 1; v <= (p - 1) / 2; ++v) {
        mpz_bin_uiui(c.get_mpz_t(), p, v);
        out.m_from_binomials += c / static_cast<unsigned long>(p);
    }
    out.minus_is_1_mod_3 = (pow2_mod(p, 3) + 3 - 1) % 3 == 1;
    out.plus_is_0_mod_3 = (pow2_mod(p, 3) + 1) % 3 == 0;
    return out;
}

PowerDivisor power_divisor(std::uint64_t p, std::uint64_t m, Sign sign) {
    if (!prime64(p)) throw Error(ErrorKind::InvalidArgument, "power_divisor requires p prime");
    if (m <= 1 || m % 2 == 0) throw Error(ErrorKind::InvalidArgument, "power_divisor requires odd m > 1");
    if (sign == Sign::Plus && p == 2) {
        throw Error(ErrorKind::InvalidArgument, "the plus form is only stated for odd p");
    }
    if (p > (std::uint64_t{1} << 24) / m) throw Error(ErrorKind::RangeTooLarge, "exponent p*m above 2^24");
    PowerDivisor out{p, m, sign, binomial_value(p, sign), binomial_value(p * m, sign), {}};
    if (!divides(out.divisor, out.value)) {
        throw Error(ErrorKind::InvalidArgument, "divisor check failed");
    }
    out.cofactor = out.value / out.divisor;
    return out;
}

ExponentFactorReport exponent_factor_report(std::uint64_t exponent, Sign sign) {
    if (exponent < 2) throw Error(ErrorKind::InvalidArgument, "exponent must be >= 2");
    if (exponent > (std::uint64_t{1} << 24)) throw Error(ErrorKind::RangeTooLarge, "exponent above 2^24");
    ExponentFactorReport out;
    out.exponent = exponent;
    out.sign = sign;
    out.value = binomial_value(exponent, sign);
    out.product = 1;
    std::uint64_t rest = exponent;
    while (rest > 1) {
        const std::uint64_t q = smallest_factor(rest);
        while (rest % q == 0) rest /= q;
        ExponentFactor f{q, binomial_value(q, sign), false};
        f.divides = divides(f.binomial, out.value);
        out.product *= f.binomial;
        out.factors.push_back(std::move(f));
    }
    out.product_divides = divides(out.product, out.value);
    return out;
}

FermatStructure fermat_structure(std::uint64_t m, unsigned i) {
    if (m < 1 || m % 2 == 0) throw Error(ErrorKind::InvalidArgument, "fermat_structure requires odd m");
    if (i < 1) throw Error(ErrorKind::InvalidArgument, "fermat_structure requires i >= 1");
    if (i > 20 || m > (std::uint64_t{1} << (20 - i))) {
        throw Error(ErrorKind::RangeTooLarge, "m * 2^i above 2^20");
    }
    const std::uint64_t g = m << i;
    const mpz_class minus = pow2(g) - 1;
    const mpz_class plus = pow2(g) + 1;

    FermatStructure out;
    out.m = m;
    out.i = i;
    out.lower_fermats_divide_minus = true;
    for (unsigned v = 0; v < i; ++v) {
        if (!divides(fermat(v), minus)) out.lower_fermats_divide_minus = false;
    }
    out.mersenne_part_divides = divides(pow2(m) - 1, minus);
    const mpz_class fi = fermat(i);
    out.fermat_divides_plus = divides(fi, plus);
    if (out.fermat_divides_plus) out.cofactor = plus / fi;
    out.three_divides_plus_m = divides(mpz_class(3), pow2(m) + 1);
    out.even_split_holds = (pow2(g / 2) + 1) * (pow2(g / 2) - 1) == minus;
    return out;
}

bool fermat_coprime(unsigned i, unsigned j) {
    if (!(j < i && i <= 14)) throw Error(ErrorKind::InvalidArgument, "fermat_coprime requires j < i <= 14");
    mpz_class g;
    const mpz_class fi = fermat(i);
    const mpz_class fj = fermat(j);
    mpz_gcd(g.get_mpz_t(), fi.get_mpz_t(), fj.get_mpz_t());
    if (g != 1) return false;
    const mpz_class a = pow2(i) - 1;
    const mpz_class b = pow2(i) + 1;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g == 1;
}

bool fermat_product_identity(unsigned i) {
    if (i < 1 || i > 12) throw Error(ErrorKind::InvalidArgument, "fermat_product_identity requires 1 <= i <= 12");
    mpz_class prod = 1;
    for (unsigned v = 0; v < i; ++v) prod *= fermat(v);
    return prod == fermat(i) - 2;
}

DivisibilityVerdict clause_verdict(std::uint64_t n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "clause_verdict requires n >= 2");
    if (n > (std::uint64_t{1} << 62)) throw Error(ErrorKind::RangeTooLarge, "n too large");
    DivisibilityVerdict v;
    v.n = n;
    v.p_prime = 2 * n + 1;
    if (!prime64(v.p_prime)) {
        throw Error(ErrorKind::NotApplicable, "2n+1 = " + std::to_string(v.p_prime) + " is not prime");
    }
    v.residue = pow2_mod(n, v.p_prime);
    v.divides_minus = v.residue == 1;
    v.divides_plus = v.residue == v.p_prime - 1;

    if (n % 4 == 0) {
        v.clause = Clause::Mod4Zero;
    } else if (n % 4 == 2) {
        v.clause = Clause::Mod4Two;
    } else if (prime64(n)) {
        v.clause = n % 4 == 3 ? Clause::Prime3Mod4 : Clause::Prime1Mod4;
    } else {
        v.clause = Clause::OutOfScope;
    }

    switch (v.clause) {
    case Clause::Mod4Zero:
    case Clause::Prime3Mod4: v.claim_holds = v.divides_minus; break;
    case Clause::Prime1Mod4:
    case Clause::Mod4Two: v.claim_holds = v.divides_plus; break;
    case Clause::OutOfScope: {
        v.claim_holds = true;
        const std::uint64_t q = smallest_factor(n);
        const std::uint64_t r = pow2_mod(q, v.p_prime);
        const bool in_binomial = v.divides_minus ? r == 1 : r == v.p_prime - 1;
        v.absorber = Absorber{q, in_binomial};
        break;
    }
    }
    return v;
}

ClauseSweep clause_sweep(std::uint64_t n_max) {
    ClauseSweep out;
    out.n_max = n_max;
    if (n_max < 2) return out;
    // Primality of 2n+1 from a local sieve over odd numbers up to 2*n_max+1.
    const std::uint64_t top = 2 * n_max + 1;
    std::vector<bool> composite(top + 1, false);
    for (std::uint64_t d = 3; d <= top / d; d += 2) {
        if (composite[d]) continue;
        for (std::uint64_t k = d * d; k <= top; k += 2 * d) composite[k] = true;
    }
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        if (composite[2 * n + 1]) continue;
        const auto v = clause_verdict(n);
        ++out.applicable;
        ++out.per_clause[static_cast<std::size_t>(v.clause)];
        if (!v.claim_holds) out.violations.push_back(n);
    }
    return out;
}

} // namespace qprime::divisibility
