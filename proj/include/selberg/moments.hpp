#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "selberg/dirpoly.hpp"
#include "selberg/numkit.hpp"
#include "selberg/primes.hpp"

namespace selberg {

struct MomentTable {
    std::uint64_t x = 0;
    std::vector<double> exact;      // index k
    std::vector<double> empirical;  // NaN when no batch was supplied
    std::vector<double> stderr_;
};

// Truncated-series Euler product  prod_{p<=x} I0(z/sqrt(p)).
TruncatedSeries euler_i0_product(const PrimeTable& table, std::size_t degree);

// (1/T) int_T^{2T} prod_l cos(t log p_l) dt for a prime multiset.
// Oscillation-aware composite Gauss-Kronrod when the panel budget allows,
// exact per-mode integration of the product-to-sum expansion otherwise.
// Preconditions: k <= 8 and T >= 1e4 * (max p)^k.
double cosine_product_integral(const std::vector<std::uint64_t>& primes, double T);

// k-th moment of the polynomial: k! * [z^k] prod_{p<=x} I0(z/sqrt(p)).
// degree 0 selects the default truncation max(2k, 80).
double exact_moment(const PrimeTable& table, unsigned k, std::size_t degree = 0);

// Verification path: k!/(2 pi i) contour integral of prod I0(w/sqrt(p)) / w^{k+1}
// on |w| = radius, trapezoid rule.
double contour_moment(const PrimeTable& table, unsigned k, std::size_t nodes = 4096,
                      double radius = 2.0);

// Sample mean of values^k (over A if restricted) and its Monte Carlo
// standard error.
std::pair<double, double> empirical_moment(const SampleBatch& batch, unsigned k,
                                           bool restrict_A);

// sum_{k<=cutoff} z^k/k! * moments[k]  (truncated MGF reconstruction).
Complex mgf_from_moments(const std::vector<double>& moments, Complex z,
                         std::size_t cutoff);

MomentTable build_moment_table(const PrimeTable& table, unsigned k_max,
                               const SampleBatch* batch = nullptr);

// CSV export: `k,exact,empirical,stderr`.
void write_moment_csv(const MomentTable& table, const std::string& path);

}  // namespace selberg
