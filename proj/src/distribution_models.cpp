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

#include "qprime/distribution_models.hpp"

#include <cmath>
#include <vector>

#include "qprime/sieve_oracle.hpp"

namespace qprime::model {

namespace {

void require_n(std::uint64_t n, const char* what) {
    if (n == 0) throw Error(ErrorKind::Domain, std::string(what) + " is singular at n = 0 (ln 1 = 0)");
}

double checked_a(const ModelParams& params) {
    const double a = params.effective_a_prime();
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorKind::InvalidArgument, "A' must be positive");
    return a;
}

// Primes needed for products over the first i0 primes.
std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::uint64_t bound = 30;
    for (;;) {
        auto ps = oracle::primes_up_to(bound);
        if (ps.size() >= count) {
            ps.resize(count);
            return ps;
        }
        bound *= 2;
    }
}

double product_upto(std::uint64_t limit) {
    double prod = 1.0;
    for (std::uint64_t p : oracle::primes_up_to(limit)) prod *= 1.0 - 1.0 / static_cast<double>(p);
    return prod;
}

} // namespace

double ModelParams::effective_a_prime() const {
    return mode == ConstantMode::Unit ? std::log(3.0) : a_prime;
}

const char* to_string(BandVariant v) noexcept {
    return v == BandVariant::Squared ? "squared" : "printed";
}

const char* to_string(ConstantMode m) noexcept { return m == ConstantMode::Fit ? "fit" : "unit"; }

BandVariant parse_band(const std::string& s) {
    if (s == "squared") return BandVariant::Squared;
    if (s == "printed") return BandVariant::Printed;
    throw Error(ErrorKind::InvalidArgument, "unknown band variant '" + s + "'");
}

ConstantMode parse_mode(const std::string& s) {
    if (s == "fit") return ConstantMode::Fit;
    if (s == "unit") return ConstantMode::Unit;
    throw Error(ErrorKind::InvalidArgument, "unknown mode '" + s + "'");
}

double log_basis(std::uint64_t n, const ModelParams& params) {
    require_n(n, "log_basis");
    if (params.exact_prec) return std::log(static_cast<double>(oracle::prec(n + 1)));
    return std::log(static_cast<double>(n) + 1.0);
}

double density(std::uint64_t n, const ModelParams& params) {
    require_n(n, "density");
    return checked_a(params) / (2.0 * log_basis(n, params));
}

double pi_model_product(std::uint64_t n) {
    require_n(n, "pi_model_product");
    return static_cast<double>(2 * n + 1) * product_upto(n + 1);
}

double pi_model_sum(std::uint64_t n) {
    require_n(n, "pi_model_sum");
    double prefix = 1.0;
    double removed = 0.0;
    for (std::uint64_t p : oracle::primes_up_to(n + 1)) {
        const double inv = 1.0 / static_cast<double>(p);
        removed += inv * prefix;
        prefix *= 1.0 - inv;
    }
    return static_cast<double>(2 * n + 1) * (1.0 - removed);
}

double euler_product(std::size_t i0) {
    double prod = 1.0;
    for (std::uint64_t p : first_primes(i0)) prod *= 1.0 - 1.0 / static_cast<double>(p);
    return prod;
}

double telescoped_product(std::size_t i0) {
    double total = 1.0;
    double prev = 1.0;
    for (std::uint64_t p : first_primes(i0)) {
        const double cur = prev * (1.0 - 1.0 / static_cast<double>(p));
        total += cur - prev;
        prev = cur;
    }
    return total;
}

CumulativeConvention table_convention() {
    return CumulativeConvention{BasisChoice::SameN, Rounding::Floor, 2};
}

std::uint64_t pi_model_cumulative(std::uint64_t n0, const CumulativeConvention& conv) {
    if (n0 < 1) throw Error(ErrorKind::InvalidArgument, "pi_model_cumulative requires n0 >= 1");
    if (conv.first_n < 1) throw Error(ErrorKind::InvalidArgument, "first_n must be >= 1");
    if (conv.basis == BasisChoice::SameN && conv.first_n < 2) {
        throw Error(ErrorKind::InvalidArgument, "prec(n) is undefined for n = 1");
    }
    const auto primes = oracle::primes_up_to(n0 + 1);
    std::uint64_t total = 0;
    double prod = 1.0;
    std::size_t next = 0;
    for (std::uint64_t n = 1; n <= n0; ++n) {
        const std::uint64_t limit = conv.basis == BasisChoice::NextN ? n + 1 : n;
        while (next < primes.size() && primes[next] <= limit) {
            prod *= 1.0 - 1.0 / static_cast<double>(primes[next]);
            ++next;
        }
        if (n < conv.first_n) continue;
        const double value = static_cast<double>(2 * n + 1) * prod;
        total += static_cast<std::uint64_t>(conv.rounding == Rounding::Floor ? std::floor(value)
                                                                             : std::round(value));
    }
    return total;
}

PrimeBand prime_band(std::uint64_t n, const ModelParams& params) {
    const double a = checked_a(params);
    const double l = log_basis(n, params);
    const double b = static_cast<double>(2 * n + 1);
    const double w = a / (2.0 * l);
    PrimeBand out;
    out.band.n = n;
    out.band.mean = b * w;
    out.band.upper = out.band.mean * (1.0 + a / l);
    out.band.lower = out.band.mean * (1.0 - a / l);
    out.pair_spacing = 1.0 / (2.0 * w * w);
    out.mean_spacing = 1.0 / w;
    out.scatter = b / out.pair_spacing;
    return out;
}

BandedPrediction twin_model(std::uint64_t n, const ModelParams& params) {
    const double a = checked_a(params);
    const double l = log_basis(n, params);
    const double w = a / (2.0 * l);
    const double f = a / l;
    BandedPrediction out;
    out.n = n;
    out.mean = static_cast<double>(2 * n + 1) * w * w;
    if (params.band == BandVariant::Squared) {
        out.upper = out.mean * (1.0 + f) * (1.0 + f);
        out.lower = out.mean * (1.0 - f) * (1.0 - f);
    } else {
        out.upper = out.mean * (1.0 + 2.0 * f * f + 4.0 * f);
        out.lower = out.mean * (1.0 + 2.0 * f * f - 4.0 * f);
    }
    return out;
}

BandedPrediction legacy_twin_band(std::uint64_t n) {
    require_n(n, "legacy_twin_band");
    const double l = std::log(static_cast<double>(n) + 1.0);
    const double b = static_cast<double>(2 * n + 1);
    auto at = [&](double a) { return b * (a / (2.0 * l)) * (a / (2.0 * l)); };
    return BandedPrediction{at(kDefaultAPrime), at(1.2 * kDefaultAPrime), at(0.8 * kDefaultAPrime), n};
}

std::uint64_t biquadratic_width(std::uint64_t n) { return 4 * n * n * n + 6 * n * n + 4 * n + 1; }

double quad_model(std::uint64_t n, const ModelParams& params) {
    const double w = density(n, params);
    return static_cast<double>(biquadratic_width(n)) * w * w * w * w;
}

BandedPrediction goldbach_model(std::uint64_t two_m, const ModelParams& params) {
    if (two_m % 2 != 0) throw Error(ErrorKind::InvalidArgument, "goldbach_model requires an even input");
    if (two_m < 8) throw Error(ErrorKind::InvalidArgument, "goldbach_model requires 2m >= 8");
    const std::uint64_t n = oracle::isqrt(two_m - 1);
    auto t = twin_model(n, params);
    return BandedPrediction{2.0 * t.mean, 2.0 * t.upper, 2.0 * t.lower, n};
}

double max_gap_model(std::uint64_t x, const ModelParams& params) {
    if (x < 3) throw Error(ErrorKind::InvalidArgument, "max_gap_model requires x >= 3");
    const double a = checked_a(params);
    const double l = std::log(static_cast<double>(x));
    return l * l / (2.0 * a * a);
}

MertensDiagnostic mertens_diagnostic(std::size_t i0_limit) {
    if (i0_limit < 2) throw Error(ErrorKind::InvalidArgument, "mertens_diagnostic requires i0 >= 2");
    const auto ps = first_primes(i0_limit);
    MertensDiagnostic d;
    d.i0 = i0_limit;
    d.p_i0 = ps.back();
    for (std::uint64_t p : ps) d.sum_reciprocal += 1.0 / static_cast<double>(p);
    d.lnln = std::log(std::log(static_cast<double>(d.p_i0)));
    d.constant = d.sum_reciprocal - d.lnln;
    return d;
}

} // namespace qprime::model
