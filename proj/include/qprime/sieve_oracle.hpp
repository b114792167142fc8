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

// sieve_oracle.hpp
// Ground truth for every model in the library: a bit-packed segmented
// sieve of Eratosthenes and the brute-force enumerators built on it.
//
// Encoding of a PrimeSegment over [lo, hi):
//   bit i  ->  odd number first_odd + 2*i,  first_odd = lo | 1
//   2 is tracked by a separate flag; every other even number is composite.
//
// All scans walk segments in ascending order. Reductions (counts, maxima
// with first-occurrence tie-break) do not depend on segment size, so any
// decomposition of a range gives identical results.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qprime/error.hpp"

namespace qprime::oracle {

inline constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kDefaultSegmentOdds = std::uint64_t{1} << 20;
// Hard limit so that (n+1)^2 and p+8 arithmetic cannot wrap.
inline constexpr std::uint64_t kMaxCeiling = std::uint64_t{1} << 62;

struct SieveConfig {
    std::uint64_t ceiling = kDefaultCeiling;        // exclusive upper end of any sieve
    std::uint64_t segment_odds = kDefaultSegmentOdds; // odd entries per segment
};

class PrimeSegment {
public:
    PrimeSegment() = default;

    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }
    std::uint64_t size() const noexcept { return hi_ - lo_; }

    // Requires lo() <= k < hi().
    bool is_prime(std::uint64_t k) const noexcept;

    std::uint64_t count() const noexcept;
    std::vector<std::uint64_t> primes() const;

    template <typename F>
    void for_each_prime(F&& f) const {
        if (has_two_) f(std::uint64_t{2});
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int tz = __builtin_ctzll(bits);
                bits &= bits - 1;
                f(first_odd_ + 2 * (std::uint64_t{w} * 64 + static_cast<std::uint64_t>(tz)));
            }
        }
    }

private:
    friend PrimeSegment build_segment(std::uint64_t lo, std::uint64_t hi,
                                      std::span<const std::uint32_t> odd_base);

    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
    std::uint64_t first_odd_ = 1;
    bool has_two_ = false;
    std::vector<std::uint64_t> words_;
};

// Odd primes <= limit by a plain sieve; the base set for segment sieving.
std::vector<std::uint32_t> odd_base_primes(std::uint64_t limit);

// Sieves [lo, hi) against odd_base, which must hold every odd prime <= sqrt(hi-1).
PrimeSegment build_segment(std::uint64_t lo, std::uint64_t hi,
                           std::span<const std::uint32_t> odd_base);

// Marks exactly the primes in [lo, hi). Throws RangeTooLarge when hi > ceiling.
PrimeSegment sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

// Visits [lo, hi) as consecutive segments of config.segment_odds odd entries.
void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                      const std::function<void(const PrimeSegment&)>& visit);

template <typename F>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config, F&& f) {
    for_each_segment(lo, hi, config, [&](const PrimeSegment& seg) { seg.for_each_prime(f); });
}

// Deterministic trial division; used to re-verify witnesses independently of the sieve.
bool is_prime(std::uint64_t k) noexcept;

std::uint64_t isqrt(std::uint64_t v) noexcept;
std::uint64_t iroot4(std::uint64_t v) noexcept;

std::vector<std::uint64_t> primes_up_to(std::uint64_t x, const SieveConfig& config = {});

// Number of primes <= x.
std::uint64_t pi_oracle(std::uint64_t x, const SieveConfig& config = {});

// Largest prime <= x. Throws InvalidArgument for x < 2.
std::uint64_t prec(std::uint64_t x, const SieveConfig& config = {});
std::uint64_t prec(double x, const SieveConfig& config = {});

enum class IntervalKind { Quadratic, Biquadratic };

const char* to_string(IntervalKind kind) noexcept;

// Left-open right-closed interval (lo, hi]: (n^2, (n+1)^2] or (n^4, (n+1)^4].
struct IntervalBounds {
    std::uint64_t lo;
    std::uint64_t hi;
};

IntervalBounds interval_bounds(std::uint64_t n, IntervalKind kind);

// Index n of the interval that holds k (k >= 2).
std::uint64_t interval_index(std::uint64_t k, IntervalKind kind) noexcept;

struct QuadIntervalStats {
    std::uint64_t n = 0;
    IntervalKind kind = IntervalKind::Quadratic;
    std::uint64_t width = 0; // 2n+1 or 4n^3+6n^2+4n+1
    std::uint64_t prime_count = 0;
    // A twin (p, p+2) belongs to the interval holding p. For p > 3 both
    // members always share the interval; (3,5) straddles 4 and lands in n=1.
    std::uint64_t twin_count = 0;
    // Constellation (p, p+2, p+6, p+8) with all four members inside.
    std::uint64_t quad_count = 0;
};

QuadIntervalStats interval_stats(std::uint64_t n, IntervalKind kind, const SieveConfig& config = {});

// Stats for every interval n_first..n_last from a single ascending scan.
std::vector<QuadIntervalStats> interval_sweep(std::uint64_t n_first, std::uint64_t n_last,
                                              IntervalKind kind, const SieveConfig& config = {});

struct GoldbachWitness {
    std::uint64_t p;
    std::uint64_t q;
    std::uint64_t sum;
};

struct GoldbachCount {
    std::uint64_t count = 0;
    std::vector<GoldbachWitness> witnesses; // ascending p, p <= q
};

// Unordered odd-prime pairs p <= q with p + q = two_m (p == q counted).
GoldbachCount goldbach_count_oracle(std::uint64_t two_m, const SieveConfig& config = {});

// Even numbers in [lo, hi] (lo >= 6) with no odd-prime pair. Expected empty.
std::vector<std::uint64_t> goldbach_failures(std::uint64_t lo, std::uint64_t hi,
                                             const SieveConfig& config = {});

struct PrimeGap {
    std::uint64_t gap = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;

    friend bool operator==(const PrimeGap&, const PrimeGap&) = default;
};

// Maximal p_{i+1} - p_i with p_{i+1} <= x; first occurrence on ties.
PrimeGap max_gap_up_to(std::uint64_t x, const SieveConfig& config = {});

// Consecutive pairs with p_{i+1} <= x violating p_{i+1} - p_i < 2*isqrt(p_{i+1}).
std::vector<PrimeGap> gap_bound_check(std::uint64_t x, const SieveConfig& config = {});

struct UntouchableWitness {
    std::uint64_t x;           // number whose proper-divisor sum equals z
    std::uint64_t divisor_sum; // == z
    std::uint64_t p = 0;       // x = p*q for z > 8, zero otherwise
    std::uint64_t q = 0;
};

// Witness that odd z is not untouchable; nullopt for z = 5.
std::optional<UntouchableWitness> untouchable_witness(std::uint64_t z);

} // namespace qprime::oracle
