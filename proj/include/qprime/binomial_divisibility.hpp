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

// binomial_divisibility.hpp
// Divisibility facts about numbers of the form 2^x +- 1.
//
// Identities over whole numbers use GMP. Sweeps over many exponents only
// need 2^n mod p', which fits in 64 bits with a 128-bit product.

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qprime/error.hpp"

namespace qprime::divisibility {

enum class Sign { Plus, Minus };

const char* to_string(Sign s) noexcept;

struct BinomialForm {
    std::uint64_t exponent = 1;
    Sign sign = Sign::Minus;

    mpz_class value() const; // 2^exponent + 1 or 2^exponent - 1
};

// 2^e mod m, m >= 1.
std::uint64_t pow2_mod(std::uint64_t e, std::uint64_t m) noexcept;

// 2^p - 1, p >= 2.
mpz_class mersenne(std::uint64_t p);

// 2^(2^i) + 1, i <= 30.
mpz_class fermat(unsigned i);

// Largest k with q^k | v (v != 0, q >= 2).
unsigned valuation(const mpz_class& v, unsigned long q);

struct OddPrimeCongruences {
    std::uint64_t p = 0;
    mpz_class m;                  // (2^(p-1) - 1) / p
    mpz_class m_from_binomials;   // sum_{v=1}^{(p-1)/2} C(p, v) / p
    bool minus_is_1_mod_3 = false; // 2^p - 1 == 1 (mod 3)
    bool plus_is_0_mod_3 = false;  // 2^p + 1 == 0 (mod 3)
};

// Requires p odd prime.
OddPrimeCongruences odd_prime_congruences(std::uint64_t p);

struct PowerDivisor {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    Sign sign = Sign::Minus;
    mpz_class divisor;  // 2^p -+ 1
    mpz_class value;    // 2^(pm) -+ 1
    mpz_class cofactor; // value / divisor, > 1
};

// (2^p -+ 1) | (2^(pm) -+ 1) for odd m > 1, confirmed by exact division.
// The plus form requires an odd prime p. For p = 2 the plus case is refused here;
// it is the i = 1 case of fermat_structure.
PowerDivisor power_divisor(std::uint64_t p, std::uint64_t m, Sign sign);

struct ExponentFactor {
    std::uint64_t prime = 0;
    mpz_class binomial;    // 2^prime +- 1
    bool divides = false;  // binomial | 2^m' +- 1
};

struct ExponentFactorReport {
    std::uint64_t exponent = 0;
    Sign sign = Sign::Minus;
    mpz_class value;
    std::vector<ExponentFactor> factors; // one per distinct prime of the exponent
    mpz_class product;                   // product of all binomials
    bool product_divides = false;        // fails when the binomials share a factor
};

// Checks each 2^p_i +- 1 against 2^m' +- 1 separately, then the joint product.
ExponentFactorReport exponent_factor_report(std::uint64_t exponent, Sign sign);

struct FermatStructure {
    std::uint64_t m = 0;
    unsigned i = 0;
    bool lower_fermats_divide_minus = false; // F_v | 2^(m 2^i) - 1 for all v < i
    bool mersenne_part_divides = false;      // (2^m - 1) | 2^(m 2^i) - 1
    bool fermat_divides_plus = false;        // F_i | 2^(m 2^i) + 1
    mpz_class cofactor;                      // (2^(m 2^i) + 1) / F_i
    bool three_divides_plus_m = false;       // 3 | 2^m + 1
    bool even_split_holds = false;           // 2^g - 1 = (2^(g/2)+1)(2^(g/2)-1), g = m 2^i
};

// m odd >= 1, i >= 1, m * 2^i <= 2^20.
FermatStructure fermat_structure(std::uint64_t m, unsigned i);

// gcd(F_i, F_j) == 1 and gcd(2^i - 1, 2^i + 1) == 1; 0 <= j < i <= 14.
bool fermat_coprime(unsigned i, unsigned j);

// prod_{v<i} F_v == F_i - 2; 1 <= i <= 12.
bool fermat_product_identity(unsigned i);

enum class Clause { Mod4Zero, Prime3Mod4, Prime1Mod4, Mod4Two, OutOfScope };

const char* to_string(Clause c) noexcept;

// For odd composite n: which factor of 2^n +- 1 = (2^q +- 1) N takes up p',
// with q the smallest prime factor of n. Recorded, never asserted.
struct Absorber {
    std::uint64_t q = 0;
    bool in_binomial = false; // p' | 2^q +- 1, otherwise p' | N
};

struct DivisibilityVerdict {
    std::uint64_t n = 0;
    std::uint64_t p_prime = 0; // 2n + 1
    Clause clause = Clause::OutOfScope;
    std::uint64_t residue = 0; // 2^n mod p'
    bool divides_minus = false;
    bool divides_plus = false;
    bool claim_holds = true; // always true for OutOfScope
    std::optional<Absorber> absorber;
};

// n >= 2; throws NotApplicable when 2n + 1 is composite.
DivisibilityVerdict clause_verdict(std::uint64_t n);

struct ClauseSweep {
    std::uint64_t n_max = 0;
    std::uint64_t applicable = 0; // n with 2n+1 prime
    std::array<std::uint64_t, 5> per_clause{};
    std::vector<std::uint64_t> violations; // expected empty
};

// Every n in [2, n_max] with 2n + 1 prime.
ClauseSweep clause_sweep(std::uint64_t n_max);

} // namespace qprime::divisibility
