#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "selberg/dirpoly.hpp"
#include "selberg/numkit.hpp"
#include "selberg/primes.hpp"

namespace selberg {

// Half-width of the 95% Wilson score interval for k successes in n trials.
double wilson_halfwidth(std::size_t successes, std::size_t n);

// Fraction of samples with value >= delta * sigma(x), plus the Wilson
// half-width.
std::pair<double, double> empirical_tail(const SampleBatch& batch, double delta);

// F(z) = prod_{p<=x} I0(z/sqrt(p)) * exp(-z^2/(4p)), accumulated in log space.
Complex F_factor(const PrimeTable& table, Complex z);

// Finite-x proxy for the tail correction constant c_k: F(k) at the given cutoff.
double c_k_estimate(double k, std::uint64_t x);

// |prod_{p<=x} I0(z/sqrt(p))| on a vertical-line grid; refuses grids outside
// the window 4 re_z^2 <= min(im)^2, max(im) <= x^{1/8}.
std::vector<double> bessel_decay_check(const PrimeTable& table, double re_z,
                                       const std::vector<double>& im_grid);

// Saddle abscissa convention: `ratio` is c = delta/sigma(x) (the exponent
// stationary point); `paper_literal` is c = delta * sigma(x)^{-1/2}.
enum class SaddleAbscissa { ratio, paper_literal };

// Truncated vertical-line (Tenenbaum) tail estimate for a model with MGF
// F(s) exp(s^2 sigma^2 / 2). Gauss-Legendre with node doubling; throws
// std::runtime_error if the quadrature fails to stabilize to 1e-6 relative.
double saddle_tail_model(const std::function<Complex(Complex)>& F, double sigma,
                         double delta, double psi,
                         SaddleAbscissa abscissa = SaddleAbscissa::ratio);

// Same for the prime Dirichlet polynomial (F = F_factor, sigma = sigma(x)).
// Preconditions: delta > 0, c = delta/sigma <= 4, psi >= 5.
double saddle_tail(const PrimeTable& table, double delta, double psi,
                   SaddleAbscissa abscissa = SaddleAbscissa::ratio);

// Synthetic random model sum_j a_j cos(U_j), whose MGF is prod I0(a_j s):
// Monte Carlo tail vs the Hwang Gaussian prediction on a delta grid.
struct HwangPoint {
    double delta = 0.0;
    double predicted = 0.0;  // Q(delta)
    double simulated = 0.0;
};
std::vector<HwangPoint> hwang_check(const std::vector<double>& amplitudes,
                                    std::size_t replicas,
                                    const std::vector<double>& delta_grid,
                                    std::uint64_t seed);

// Monte Carlo moments of |log|zeta| - poly| at 2k for each k in k_list;
// near-zero zeta samples are dropped and counted.
struct DiscrepancyReport {
    std::vector<unsigned> k_list;
    std::vector<double> moments;
    std::size_t dropped = 0;
    std::size_t kept = 0;
};
DiscrepancyReport discrepancy_moments(double T, std::uint64_t x, std::size_t n,
                                      const std::vector<unsigned>& k_list,
                                      std::uint64_t seed);

struct TailReport {
    std::uint64_t x = 0;
    double T = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    double sigma = 0.0;
    double psi = 0.0;
    std::string abscissa = "ratio";
    std::vector<double> delta;
    std::vector<double> empirical;
    std::vector<double> ci_halfwidth;
    std::vector<double> gaussian;
    std::vector<double> corrected;   // F(c) * Q(delta)
    std::vector<double> saddle;      // truncated-line integral (NaN off-domain)
};

TailReport build_tail_report(const PrimeTable& table, const SampleBatch& batch,
                             const std::vector<double>& deltas, double psi,
                             SaddleAbscissa abscissa = SaddleAbscissa::ratio);

}  // namespace selberg
