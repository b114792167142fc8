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

#include "qprime/exact_count.hpp"

#include <string>

namespace qprime::exact {

namespace {

bool trial_prime(std::uint64_t k) {
    if (k < 2) return false;
    for (std::uint64_t d = 2; d * d <= k; ++d) {
        if (k % d == 0) return false;
    }
    return true;
}

std::uint64_t root(std::uint64_t x) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

void check_input(std::uint64_t x, const ExactConfig& config) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, "sigma_exact requires x >= 1");
    if (x > config.cap) {
        throw Error(ErrorKind::ExactCapExceeded,
                    "x = " + std::to_string(x) + " is above the exact-engine cap " +
                        std::to_string(config.cap) + "; use the oracle engine");
    }
}

// Signed sum of [x/d] over d = head * C, C drawn from primes[from..to) ascending.
std::int64_t subset_floor_sum(std::uint64_t x, const std::vector<std::uint64_t>& primes,
                              std::size_t from, std::size_t to, std::uint64_t head, int sign) {
    std::int64_t total = sign * static_cast<std::int64_t>(x / head);
    for (std::size_t k = from; k < to; ++k) {
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(head, primes[k], &next) || next > x) break;
        total += subset_floor_sum(x, primes, k + 1, to, next, -sign);
    }
    return total;
}

void visit_terms(std::uint64_t x, const std::vector<std::uint64_t>& primes, std::size_t i,
                 std::size_t from, std::size_t j, std::uint64_t head,
                 const std::function<void(const CombinationTerm&)>& visit) {
    visit(CombinationTerm{i, j, head, j % 2 == 0 ? 1 : -1});
    for (std::size_t k = from; k + 1 < i; ++k) {
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(head, primes[k], &next) || next > x) break;
        visit_terms(x, primes, i, k + 1, j + 1, next, visit);
    }
}

} // namespace

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t k = 2; k < (1U << 16); ++k) {
            if (trial_prime(k)) out.push_back(k);
        }
        return out;
    }();
    return table;
}

PrimeBasis prime_basis(std::uint64_t x) {
    const std::uint64_t r = root(x);
    if (r >= (1U << 16)) throw Error(ErrorKind::RangeTooLarge, "prime basis needs primes above 2^16");
    PrimeBasis basis;
    for (std::uint64_t p : small_primes()) {
        if (p > r) break;
        basis.primes.push_back(p);
    }
    return basis;
}

void for_each_term(std::uint64_t x, const PrimeBasis& basis,
                   const std::function<void(const CombinationTerm&)>& visit) {
    const auto& ps = basis.primes;
    for (std::size_t i = 1; i <= ps.size(); ++i) {
        if (ps[i - 1] > x) break;
        visit_terms(x, ps, i, 0, 0, ps[i - 1], visit);
    }
}

std::uint64_t sigma_exact(std::uint64_t x, const PrimeBasis& basis, const ExactConfig& config) {
    check_input(x, config);
    const auto& ps = basis.primes;
    const std::uint64_t r = root(x);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0 && ps[i] <= ps[i - 1]) {
            throw Error(ErrorKind::InvalidArgument, "basis primes must be strictly ascending");
        }
        if (ps[i] > x) throw Error(ErrorKind::InvalidArgument, "basis prime above x");
        if (ps[i] <= r) ++covered;
    }
    if (covered != prime_basis(x).i0()) {
        throw Error(ErrorKind::InvalidArgument, "basis must contain every prime <= sqrt(x)");
    }

    std::int64_t sigma = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        sigma += -1 + subset_floor_sum(x, ps, 0, i, ps[i], 1);
    }
    return static_cast<std::uint64_t>(sigma);
}

std::uint64_t sigma_exact(std::uint64_t x, const ExactConfig& config) {
    check_input(x, config);
    return sigma_exact(x, prime_basis(x), config);
}

std::uint64_t pi_exact(std::uint64_t x, const ExactConfig& config) {
    return x - sigma_exact(x, config);
}

DeltaVerdict delta_classify(std::uint64_t two_n, const ExactConfig& config) {
    if (two_n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "delta_classify requires an even input");
    if (two_n < 4) throw Error(ErrorKind::InvalidArgument, "delta_classify requires 2n >= 4");
    DeltaVerdict v;
    v.two_n = two_n;
    v.sigma_2n = sigma_exact(two_n, config);
    v.sigma_2n1 = sigma_exact(two_n + 1, config);
    v.sigma_2n3 = sigma_exact(two_n + 3, config);
    v.delta = v.sigma_2n1 - v.sigma_2n;
    v.delta2 = v.sigma_2n3 - v.sigma_2n1;
    v.first_prime = v.delta == 0;
    // 2n+2 is even and > 2, so it always adds one; 2n+3 prime leaves exactly that.
    v.second_prime = v.delta2 == 1;
    v.twin = v.first_prime && v.second_prime;
    return v;
}

std::uint64_t sigma_interval_exact(std::uint64_t n, const ExactConfig& config) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "sigma_interval_exact requires n >= 1");
    return sigma_exact((n + 1) * (n + 1), config) - sigma_exact(n * n, config);
}

std::uint64_t floor_div(std::uint64_t a, std::uint64_t b) {
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "floor_div by zero");
    return a / b;
}

double reciprocal_subset_sum(std::size_t i, int s) {
    if (i < 1 || i > 24) throw Error(ErrorKind::InvalidArgument, "reciprocal_subset_sum requires 1 <= i <= 24");
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    const auto& ps = small_primes();
    const std::size_t m = i - 1;
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        double term = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            if (mask >> k & 1U) term *= s / static_cast<double>(ps[k]);
        }
        total += term;
    }
    return total;
}

double reciprocal_product(std::size_t i, int s) {
    if (i < 1) throw Error(ErrorKind::InvalidArgument, "reciprocal_product requires i >= 1");
    const auto& ps = small_primes();
    double prod = 1.0;
    for (std::size_t k = 0; k + 1 < i; ++k) prod *= 1.0 + s / static_cast<double>(ps[k]);
    return prod;
}

} // namespace qprime::exact
