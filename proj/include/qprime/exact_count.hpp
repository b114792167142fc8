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

// exact_count.hpp
// Inclusion-exclusion count of the non-primes up to x (1 included):
//
//   sigma(x) = 1 + sum_{i=1}^{i0} ( -1 + sum_{j=0}^{i-1} (-1)^j sum_k [x / (p_i C_{j,i-1,k})] )
//
// where C_{j,i-1,k} runs over the products of j distinct primes among
// p_1..p_{i-1} and p_{i0} is the largest prime <= sqrt(x). The inner term
// for p_i counts the multiples of p_i that have no smaller prime factor.
//
// Subsets are enumerated depth first over ascending prime indices. A branch
// stops as soon as its product exceeds x, because every extension of it
// only grows and all such floors are zero.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qprime/error.hpp"

namespace qprime::exact {

// Largest x accepted by default. Cost grows quickly past this point; use the sieve.
inline constexpr std::uint64_t kExactCap = 10'000'000;

struct PrimeBasis {
    std::vector<std::uint64_t> primes; // ascending, p_1 = 2

    std::size_t i0() const noexcept { return primes.size(); }
};

// All primes <= isqrt(x). Built from a trial-division table, not from the sieve.
PrimeBasis prime_basis(std::uint64_t x);

struct CombinationTerm {
    std::size_t i = 0;         // outer prime index, 1-based
    std::size_t j = 0;         // number of primes in C
    std::uint64_t product = 0; // p_i * C_{j,i-1,k}, always <= x
    int sign = 1;              // (-1)^j
};

// Visits every term with a nonzero floor, i.e. product <= x.
void for_each_term(std::uint64_t x, const PrimeBasis& basis,
                   const std::function<void(const CombinationTerm&)>& visit);

struct ExactConfig {
    std::uint64_t cap = kExactCap;
};

// Throws InvalidArgument for x < 1 and ExactCapExceeded for x > cap.
std::uint64_t sigma_exact(std::uint64_t x, const ExactConfig& config = {});

// Same sum over an explicit basis. The basis must hold every prime <= sqrt(x)
// in ascending order; extra primes are allowed as long as they are <= x.
std::uint64_t sigma_exact(std::uint64_t x, const PrimeBasis& basis, const ExactConfig& config = {});

// x - sigma_exact(x).
std::uint64_t pi_exact(std::uint64_t x, const ExactConfig& config = {});

struct DeltaVerdict {
    std::uint64_t two_n = 0;
    std::uint64_t sigma_2n = 0;
    std::uint64_t sigma_2n1 = 0; // sigma(2n+1)
    std::uint64_t sigma_2n3 = 0; // sigma(2n+3)
    std::uint64_t delta = 0;     // sigma(2n+1) - sigma(2n), 0 iff 2n+1 prime
    std::uint64_t delta2 = 0;    // sigma(2n+3) - sigma(2n+1), 1 iff 2n+3 prime
    bool first_prime = false;
    bool second_prime = false;
    bool twin = false; // delta == 0 && delta2 == 1
};

// two_n >= 4 and even.
DeltaVerdict delta_classify(std::uint64_t two_n, const ExactConfig& config = {});

// sigma((n+1)^2) - sigma(n^2): the non-primes in (n^2, (n+1)^2].
std::uint64_t sigma_interval_exact(std::uint64_t n, const ExactConfig& config = {});

// [a / b] for b >= 1.
std::uint64_t floor_div(std::uint64_t a, std::uint64_t b);

// sum over all subsets C of {p_1..p_{i-1}} of s^|C| / prod(C), s = -1 or +1.
// Unpruned, so i is limited to 24.
double reciprocal_subset_sum(std::size_t i, int s);

// prod_{j=1}^{i-1} (1 + s/p_j).
double reciprocal_product(std::size_t i, int s);

// All 6542 primes below 2^16, by trial division.
const std::vector<std::uint64_t>& small_primes();

} // namespace qprime::exact
