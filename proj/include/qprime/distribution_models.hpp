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

// distribution_models.hpp
// Closed-form laws for how many primes, twins, quadruplets and Goldbach
// pairs fall into (n^2, (n+1)^2] or (n^4, (n+1)^4].
//
// Everything is driven by the interval density
//     W = A' / (2 ln(n+1))
// with the logarithm of the largest basis prime approximated by ln(n+1),
// or taken exactly as ln prec(n+1) when ModelParams::exact_prec is set.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qprime/error.hpp"

namespace qprime::model {

inline constexpr double kDefaultAPrime = 1.06;

// How the +- envelope around a twin mean is formed.
//   Squared: mean * (1 +- f)^2,        f = A'/ln(n+1)
//   Printed: mean * (1 + 2f^2 +- 4f)
enum class BandVariant { Squared, Printed };

// Fit: A' as given. Unit: A'' = 1, hence A' = ln 3.
enum class ConstantMode { Fit, Unit };

struct ModelParams {
    double a_prime = kDefaultAPrime;
    BandVariant band = BandVariant::Squared;
    ConstantMode mode = ConstantMode::Fit;
    bool exact_prec = false;

    // The constant actually used: ln 3 in unit mode, a_prime otherwise.
    double effective_a_prime() const;
};

const char* to_string(BandVariant v) noexcept;
const char* to_string(ConstantMode m) noexcept;
BandVariant parse_band(const std::string& s);
ConstantMode parse_mode(const std::string& s);

struct BandedPrediction {
    double mean = 0;
    double upper = 0;
    double lower = 0;
    std::uint64_t n = 0;
};

// ln(n+1), or ln prec(n+1) with exact_prec. Throws Domain for n = 0.
double log_basis(std::uint64_t n, const ModelParams& params);

double density(std::uint64_t n, const ModelParams& params = {});

// (2n+1) * prod_{p <= prec(n+1)} (1 - 1/p).
double pi_model_product(std::uint64_t n);

// The same quantity as 2n+1 minus the expected multiples of each basis prime:
// (2n+1) * (1 - sum_i (1/p_i) prod_{j<i} (1 - 1/p_j)).
double pi_model_sum(std::uint64_t n);

// prod_{j<=i0} (1 - 1/p_j) over the first i0 primes.
double euler_product(std::size_t i0);

// 1 + sum_{i=1}^{i0} (P_i - P_{i-1}) with P_i the partial products above.
double telescoped_product(std::size_t i0);

enum class BasisChoice {
    NextN, // primes <= prec(n+1)
    SameN  // primes <= prec(n); needs n >= 2
};

enum class Rounding { Floor, Nearest };

struct CumulativeConvention {
    BasisChoice basis = BasisChoice::NextN;
    Rounding rounding = Rounding::Floor;
    std::uint64_t first_n = 1;
};

// The convention that reproduces the printed cumulative table.
CumulativeConvention table_convention();

// sum_{n=first_n}^{n0} round((2n+1) * prod(1 - 1/p)).
std::uint64_t pi_model_cumulative(std::uint64_t n0, const CumulativeConvention& conv = {});

struct PrimeBand {
    BandedPrediction band;   // mean = A'(n+1/2)/ln(n+1), band mean*(1 +- A'/ln(n+1))
    double pair_spacing = 0; // 1/(2W^2) = 2 ln^2(n+1) / A'^2
    double mean_spacing = 0; // b_n / mean = 1/W
    double scatter = 0;      // b_n / pair_spacing
};

PrimeBand prime_band(std::uint64_t n, const ModelParams& params = {});

// mean = (2n+1) W^2, band per params.band.
BandedPrediction twin_model(std::uint64_t n, const ModelParams& params = {});

// Fixed A' = 1.06; bounds with A' scaled by 1.2 and 0.8.
BandedPrediction legacy_twin_band(std::uint64_t n);

// b4 * W^4 with b4 = 4n^3 + 6n^2 + 4n + 1.
double quad_model(std::uint64_t n, const ModelParams& params = {});

std::uint64_t biquadratic_width(std::uint64_t n);

// 2 * twin_model(n) with n^2 < 2m <= (n+1)^2. Requires 2m >= 8 and even.
BandedPrediction goldbach_model(std::uint64_t two_m, const ModelParams& params = {});

// ln^2 x / (2 A'^2).
double max_gap_model(std::uint64_t x, const ModelParams& params = {});

struct MertensDiagnostic {
    std::size_t i0 = 0;
    std::uint64_t p_i0 = 0;
    double sum_reciprocal = 0; // sum_{j<=i0} 1/p_j
    double lnln = 0;           // ln ln p_i0
    double constant = 0;       // sum_reciprocal - lnln
};

MertensDiagnostic mertens_diagnostic(std::size_t i0_limit);

} // namespace qprime::model
