#include "selberg/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "selberg/quadrature.hpp"

namespace selberg {

TruncatedSeries euler_i0_product(const PrimeTable& table, std::size_t degree) {
    TruncatedSeries prod(degree);
    prod[0] = 1.0;
    for (double inv_sqrt : table.inv_sqrt) {
        const TruncatedSeries factor =
            TruncatedSeries::bessel_i0_series(degree, inv_sqrt);
        // in-place convolution; the factor is even with unit constant term,
        // so descending j only reads not-yet-updated entries
        for (std::size_t j = degree + 1; j-- > 2;) {
            double acc = prod[j];
            for (std::size_t m = 2; m <= j; m += 2) acc += prod[j - m] * factor[m];
            prod[j] = acc;
        }
    }
    return prod;
}

double cosine_product_integral(const std::vector<std::uint64_t>& primes, double T) {
    const std::size_t k = primes.size();
    if (k == 0 || k > 8)
        throw std::domain_error("cosine_product_integral: need 1 <= k <= 8");
    const std::uint64_t max_p = *std::max_element(primes.begin(), primes.end());
    double budget = 1e4;
    for (std::size_t i = 0; i < k; ++i) budget *= static_cast<double>(max_p);
    if (!(T >= budget))
        throw std::domain_error(
            "cosine_product_integral: T too small, error term dominates");

    std::vector<double> freqs(k);
    for (std::size_t i = 0; i < k; ++i) freqs[i] = std::log(static_cast<double>(primes[i]));

    // oscillation-aware panel width pi/(4 k log(max p))
    const double width = M_PI / (4.0 * static_cast<double>(k) * freqs.back());
    const double npanels = T / width;
    if (npanels <= 2e5) {
        const auto integrand = [&](double t) {
            double prod = 1.0;
            for (double w : freqs) prod *= std::cos(t * w);
            return prod;
        };
        double total = 0.0;
        const std::size_t np = static_cast<std::size_t>(npanels) + 1;
        const double h = T / static_cast<double>(np);
        for (std::size_t i = 0; i < np; ++i) {
            double err;
            total += gauss_kronrod_15(integrand, T + i * h, T + (i + 1) * h, err);
        }
        return total / T;
    }

    // Exact per-mode integration of
    //   prod cos(a_l t) = 2^{-k} sum_{s in {-1,1}^k} cos(t sum s_l a_l).
    // A mode has frequency exactly zero iff every prime's signed exponent
    // cancels; that is detected combinatorially, not by a float threshold.
    double total = 0.0;
    const std::size_t npatterns = std::size_t{1} << k;
    for (std::size_t bits = 0; bits < npatterns; ++bits) {
        std::map<std::uint64_t, int> exponent;
        double omega = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const int s = (bits >> i) & 1 ? 1 : -1;
            exponent[primes[i]] += s;
            omega += s * freqs[i];
        }
        bool balanced = true;
        for (const auto& [p, e] : exponent)
            if (e != 0) { balanced = false; break; }
        if (balanced) {
            total += 1.0;
        } else {
            total += (std::sin(2.0 * T * omega) - std::sin(T * omega)) / (T * omega);
        }
    }
    return total / static_cast<double>(npatterns);
}

double exact_moment(const PrimeTable& table, unsigned k, std::size_t degree) {
    if (k > 200) throw std::domain_error("exact_moment: k > 200");
    if (degree == 0) degree = std::max<std::size_t>(2 * k, 80);
    if (degree < k) throw std::invalid_argument("exact_moment: degree < k");
    if (k % 2 != 0) return 0.0;
    const TruncatedSeries prod = euler_i0_product(table, degree);
    double fact = 1.0;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    return fact * prod[k];
}

double contour_moment(const PrimeTable& table, unsigned k, std::size_t nodes,
                      double radius) {
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double phi = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(nodes);
        const Complex w = std::polar(radius, phi);
        Complex prod(1.0, 0.0);
        for (double inv_sqrt : table.inv_sqrt) prod *= bessel_i0(w * inv_sqrt);
        acc += std::real(prod * std::exp(-static_cast<double>(k) * std::log(w)));
    }
    double fact = 1.0;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    return fact * acc / static_cast<double>(nodes);
}

std::pair<double, double> empirical_moment(const SampleBatch& batch, unsigned k,
                                           bool restrict_A) {
    if (k > 50) throw std::domain_error("empirical_moment: k > 50");
    double sum = 0.0, sum_sq = 0.0;
    std::size_t m = 0;
    for (std::size_t j = 0; j < batch.size(); ++j) {
        if (restrict_A && !batch.in_A[j]) continue;
        const double vk = std::pow(batch.values[j], static_cast<double>(k));
        sum += vk;
        sum_sq += vk * vk;
        ++m;
    }
    if (m == 0) throw std::domain_error("empirical_moment: empty restriction");
    const double mean = sum / static_cast<double>(m);
    const double var = std::max(0.0, sum_sq / static_cast<double>(m) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(m))};
}

Complex mgf_from_moments(const std::vector<double>& moments, Complex z,
                         std::size_t cutoff) {
    if (cutoff >= moments.size())
        throw std::invalid_argument("mgf_from_moments: cutoff exceeds moment table");
    if (std::abs(z) > 1.0) throw std::domain_error("mgf_from_moments: |z| > 1");
    Complex acc(0.0, 0.0);
    Complex zk(1.0, 0.0);
    double fact = 1.0;
    for (std::size_t k = 0; k <= cutoff; ++k) {
        if (k > 0) { zk *= z; fact *= static_cast<double>(k); }
        acc += zk / fact * moments[k];
    }
    return acc;
}

MomentTable build_moment_table(const PrimeTable& table, unsigned k_max,
                               const SampleBatch* batch) {
    MomentTable out;
    out.x = table.x_limit;
    const std::size_t degree = std::max<std::size_t>(2 * k_max, 80);
    const TruncatedSeries prod = euler_i0_product(table, degree);
    double fact = 1.0;
    for (unsigned k = 0; k <= k_max; ++k) {
        if (k > 0) fact *= k;
        out.exact.push_back(k % 2 ? 0.0 : fact * prod[k]);
        if (batch) {
            const auto [mean, err] = empirical_moment(*batch, k, false);
            out.empirical.push_back(mean);
            out.stderr_.push_back(err);
        } else {
            out.empirical.push_back(std::nan(""));
            out.stderr_.push_back(std::nan(""));
        }
    }
    return out;
}

void write_moment_csv(const MomentTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_moment_csv: cannot open " + path);
    out << "k,exact,empirical,stderr\n";
    char line[128];
    for (std::size_t k = 0; k < table.exact.size(); ++k) {
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", k, table.exact[k],
                      table.empirical[k], table.stderr_[k]);
        out << line;
    }
}

}  // namespace selberg
