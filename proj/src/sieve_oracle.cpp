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

#include "qprime/sieve_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <string>

namespace qprime::oracle {

namespace {

void require_within(std::uint64_t hi, const SieveConfig& config) {
    if (config.ceiling > kMaxCeiling) {
        throw Error(ErrorKind::RangeTooLarge, "sieve ceiling above 2^62 is not supported");
    }
    if (hi > config.ceiling) {
        throw Error(ErrorKind::RangeTooLarge,
                    "range end " + std::to_string(hi) + " exceeds sieve ceiling " +
                        std::to_string(config.ceiling));
    }
}

// Checked (n+1)^k style powers; nullopt on overflow past kMaxCeiling.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > kMaxCeiling / base) return std::nullopt;
        r *= base;
    }
    return r;
}

} // namespace

const char* to_string(IntervalKind kind) noexcept {
    return kind == IntervalKind::Quadratic ? "quadratic" : "biquadratic";
}

std::uint64_t isqrt(std::uint64_t v) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::uint64_t iroot4(std::uint64_t v) noexcept { return isqrt(isqrt(v)); }

bool is_prime(std::uint64_t k) noexcept {
    if (k < 2) return false;
    if (k < 4) return true;
    if (k % 2 == 0 || k % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= k / d; d += 6) {
        if (k % d == 0 || k % (d + 2) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PrimeSegment
// ---------------------------------------------------------------------------

bool PrimeSegment::is_prime(std::uint64_t k) const noexcept {
    assert(k >= lo_ && k < hi_);
    if (k == 2) return has_two_;
    if (k % 2 == 0) return false;
    const std::uint64_t bit = (k - first_odd_) / 2;
    return (words_[bit / 64] >> (bit % 64)) & 1U;
}

std::uint64_t PrimeSegment::count() const noexcept {
    std::uint64_t c = has_two_ ? 1 : 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::vector<std::uint64_t> PrimeSegment::primes() const {
    std::vector<std::uint64_t> out;
    for_each_prime([&](std::uint64_t p) { out.push_back(p); });
    return out;
}

std::vector<std::uint32_t> odd_base_primes(std::uint64_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 3) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = true;
    }
    return out;
}

PrimeSegment build_segment(std::uint64_t lo, std::uint64_t hi,
                           std::span<const std::uint32_t> odd_base) {
    PrimeSegment seg;
    seg.lo_ = lo;
    seg.hi_ = hi;
    seg.first_odd_ = lo | 1U;
    seg.has_two_ = lo <= 2 && 2 < hi;
    if (hi <= seg.first_odd_) return seg;

    const std::uint64_t odd_count = (hi - seg.first_odd_ + 1) / 2;
    seg.words_.assign((odd_count + 63) / 64, ~std::uint64_t{0});
    if (odd_count % 64 != 0) seg.words_.back() = (std::uint64_t{1} << (odd_count % 64)) - 1;
    if (seg.first_odd_ == 1) seg.words_[0] &= ~std::uint64_t{1};

    for (std::uint32_t p32 : odd_base) {
        const std::uint64_t p = p32;
        if (p * p >= hi) break;
        // First odd multiple of p that is >= max(p*p, first_odd).
        std::uint64_t start = std::max(p * p, (seg.first_odd_ + p - 1) / p * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t m = start; m < hi; m += 2 * p) {
            const std::uint64_t bit = (m - seg.first_odd_) / 2;
            seg.words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
        }
    }
    return seg;
}

PrimeSegment sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "sieve_range requires lo <= hi");
    require_within(hi, config);
    const auto base = odd_base_primes(hi == 0 ? 0 : isqrt(hi - 1));
    return build_segment(lo, hi, base);
}

void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                      const std::function<void(const PrimeSegment&)>& visit) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "segment scan requires lo <= hi");
    require_within(hi, config);
    if (lo == hi) return;
    const std::uint64_t span = 2 * std::max<std::uint64_t>(config.segment_odds, 32);
    const auto base = odd_base_primes(isqrt(hi - 1));
    for (std::uint64_t seg_lo = lo; seg_lo < hi;) {
        const std::uint64_t seg_hi = hi - seg_lo > span ? seg_lo + span : hi;
        visit(build_segment(seg_lo, seg_hi, base));
        seg_lo = seg_hi;
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x, const SieveConfig& config) {
    std::vector<std::uint64_t> out;
    for_each_prime(0, x + 1, config, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

std::uint64_t pi_oracle(std::uint64_t x, const SieveConfig& config) {
    std::uint64_t total = 0;
    for_each_segment(0, x + 1, config, [&](const PrimeSegment& seg) { total += seg.count(); });
    return total;
}

std::uint64_t prec(std::uint64_t x, const SieveConfig& config) {
    if (x < 2) throw Error(ErrorKind::InvalidArgument, "prec is undefined below 2");
    require_within(x + 1, config);
    for (std::uint64_t window = 4096;; window *= 2) {
        const std::uint64_t lo = x + 1 > window ? x + 1 - window : 0;
        std::uint64_t last = 0;
        sieve_range(lo, x + 1, config).for_each_prime([&](std::uint64_t p) { last = p; });
        if (last != 0) return last;
    }
}

std::uint64_t prec(double x, const SieveConfig& config) {
    if (!(x >= 2.0)) throw Error(ErrorKind::InvalidArgument, "prec is undefined below 2");
    auto n = static_cast<std::uint64_t>(std::floor(x));
    // Guard against floor() landing one above the true integer part.
    while (static_cast<double>(n) > x) --n;
    return prec(n, config);
}

// ---------------------------------------------------------------------------
// Quadratic / biquadratic intervals
// ---------------------------------------------------------------------------

IntervalBounds interval_bounds(std::uint64_t n, IntervalKind kind) {
    const int exp = kind == IntervalKind::Quadratic ? 2 : 4;
    const auto lo = checked_pow(n, exp);
    const auto hi = checked_pow(n + 1, exp);
    if (!lo || !hi) {
        throw Error(ErrorKind::RangeTooLarge, "interval index " + std::to_string(n) + " overflows");
    }
    return {*lo, *hi};
}

std::uint64_t interval_index(std::uint64_t k, IntervalKind kind) noexcept {
    assert(k >= 1);
    return kind == IntervalKind::Quadratic ? isqrt(k - 1) : iroot4(k - 1);
}

std::vector<QuadIntervalStats> interval_sweep(std::uint64_t n_first, std::uint64_t n_last,
                                              IntervalKind kind, const SieveConfig& config) {
    if (n_first < 1 || n_last < n_first) {
        throw Error(ErrorKind::InvalidArgument, "interval sweep requires 1 <= n_first <= n_last");
    }
    const auto first = interval_bounds(n_first, kind);
    const auto last = interval_bounds(n_last, kind);
    const std::uint64_t lo = first.lo;
    const std::uint64_t hi = last.hi;

    std::vector<QuadIntervalStats> out(n_last - n_first + 1);
    for (std::uint64_t n = n_first; n <= n_last; ++n) {
        auto& s = out[n - n_first];
        const auto b = interval_bounds(n, kind);
        s.n = n;
        s.kind = kind;
        s.width = b.hi - b.lo;
    }
    auto slot = [&](std::uint64_t k) -> QuadIntervalStats& {
        return out[interval_index(k, kind) - n_first];
    };

    // Scan two past hi so a twin whose lower member is the last prime <= hi is seen.
    std::array<std::uint64_t, 4> window{}; // last four primes, window[3] newest
    std::uint64_t seen = 0;
    for_each_prime(lo + 1, hi + 3, config, [&](std::uint64_t p) {
        if (p <= hi) ++slot(p).prime_count;
        const std::uint64_t prev = window[3];
        if (seen > 0 && p - prev == 2 && prev > lo && prev <= hi) ++slot(prev).twin_count;

        window = {window[1], window[2], window[3], p};
        ++seen;
        if (seen >= 4) {
            const auto [q0, q1, q2, q3] = window;
            if (q1 - q0 == 2 && q2 - q1 == 4 && q3 - q2 == 2 && q3 <= hi &&
                interval_index(q0, kind) == interval_index(q3, kind)) {
                ++slot(q0).quad_count;
            }
        }
    });
    return out;
}

QuadIntervalStats interval_stats(std::uint64_t n, IntervalKind kind, const SieveConfig& config) {
    return interval_sweep(n, n, kind, config).front();
}

// ---------------------------------------------------------------------------
// Goldbach, gaps, untouchable numbers
// ---------------------------------------------------------------------------

GoldbachCount goldbach_count_oracle(std::uint64_t two_m, const SieveConfig& config) {
    if (two_m % 2 != 0) throw Error(ErrorKind::InvalidArgument, "Goldbach input must be even");
    if (two_m < 6) throw Error(ErrorKind::InvalidArgument, "Goldbach input must be >= 6");
    const auto seg = sieve_range(0, two_m, config);
    GoldbachCount result;
    for (std::uint64_t p = 3; p <= two_m / 2; p += 2) {
        if (seg.is_prime(p) && seg.is_prime(two_m - p)) {
            result.witnesses.push_back({p, two_m - p, two_m});
        }
    }
    result.count = result.witnesses.size();
    return result;
}

std::vector<std::uint64_t> goldbach_failures(std::uint64_t lo, std::uint64_t hi,
                                             const SieveConfig& config) {
    if (lo < 6) throw Error(ErrorKind::InvalidArgument, "Goldbach sweep must start at >= 6");
    std::vector<std::uint64_t> failures;
    if (hi < lo) return failures;
    const auto seg = sieve_range(0, hi + 1, config);
    std::vector<std::uint64_t> odd_primes;
    seg.for_each_prime([&](std::uint64_t p) {
        if (p != 2) odd_primes.push_back(p);
    });
    for (std::uint64_t two_m = lo + (lo % 2); two_m <= hi; two_m += 2) {
        bool found = false;
        for (std::uint64_t p : odd_primes) {
            if (p > two_m / 2) break;
            if (seg.is_prime(two_m - p)) {
                found = true;
                break;
            }
        }
        if (!found) failures.push_back(two_m);
    }
    return failures;
}

PrimeGap max_gap_up_to(std::uint64_t x, const SieveConfig& config) {
    if (x < 3) throw Error(ErrorKind::InvalidArgument, "max_gap_up_to requires x >= 3");
    PrimeGap best;
    std::uint64_t prev = 0;
    for_each_prime(0, x + 1, config, [&](std::uint64_t p) {
        if (prev != 0 && p - prev > best.gap) best = {p - prev, prev, p};
        prev = p;
    });
    return best;
}

std::vector<PrimeGap> gap_bound_check(std::uint64_t x, const SieveConfig& config) {
    if (x < 3) throw Error(ErrorKind::InvalidArgument, "gap_bound_check requires x >= 3");
    std::vector<PrimeGap> violations;
    std::uint64_t prev = 0;
    for_each_prime(0, x + 1, config, [&](std::uint64_t p) {
        if (prev != 0 && p - prev >= 2 * isqrt(p)) violations.push_back({p - prev, prev, p});
        prev = p;
    });
    return violations;
}

std::optional<UntouchableWitness> untouchable_witness(std::uint64_t z) {
    if (z % 2 == 0) throw Error(ErrorKind::InvalidArgument, "untouchable_witness requires odd z");
    if (z < 3) throw Error(ErrorKind::InvalidArgument, "untouchable_witness requires z >= 3");
    if (z == 3) return UntouchableWitness{4, 3};      // 1 + 2
    if (z == 5) return std::nullopt;                  // 5 is untouchable
    if (z == 7) return UntouchableWitness{8, 7};      // 1 + 2 + 4
    const std::uint64_t two_n = z - 1;
    for (std::uint64_t p = 3; p < two_n - p; p += 2) {
        if (is_prime(p) && is_prime(two_n - p)) {
            return UntouchableWitness{p * (two_n - p), z, p, two_n - p};
        }
    }
    return std::nullopt;
}

} // namespace qprime::oracle
