#include "selberg/tails.hpp"

#include <cmath>
#include <stdexcept>

#include "selberg/critline.hpp"
#include "selberg/parallel.hpp"
#include "selberg/rng.hpp"

namespace selberg {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void legendre_rule(std::size_t n, std::vector<double>& nodes,
                   std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double saddle_line_integral(const std::function<Complex(Complex)>& F, double sigma,
                            double a, double c, double psi, std::size_t n) {
    std::vector<double> nodes, weights;
    legendre_rule(n, nodes, weights);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = psi * nodes[i];
        const Complex s(c, v / sigma);
        const Complex expo = 0.5 * sigma * sigma * s * s - s * a;
        acc += weights[i] * std::real(F(s) * std::exp(expo) / s);
    }
    return acc * psi / (2.0 * M_PI * sigma);
}

}  // namespace

double wilson_halfwidth(std::size_t successes, std::size_t n) {
    if (n == 0) throw std::domain_error("wilson_halfwidth: n = 0");
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double nd = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nd;
    const double z2 = z * z;
    return z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / (1.0 + z2 / nd);
}

std::pair<double, double> empirical_tail(const SampleBatch& batch, double delta) {
    if (batch.size() == 0) throw std::domain_error("empirical_tail: empty batch");
    const double threshold = delta * batch.sigma;
    std::size_t hits = 0;
    for (double v : batch.values)
        if (v >= threshold) ++hits;
    const double frac = static_cast<double>(hits) / static_cast<double>(batch.size());
    return {frac, wilson_halfwidth(hits, batch.size())};
}

// no range guard: the saddle line integral legitimately wanders past the
// public |z| <= 10 window (the product converges for any z)
static Complex F_factor_raw(const PrimeTable& table, Complex z) {
    Complex log_acc(0.0, 0.0);
    for (double inv_sqrt : table.inv_sqrt) {
        const Complex w = z * inv_sqrt;
        log_acc += std::log(bessel_i0(w)) - 0.25 * w * w;
    }
    return std::exp(log_acc);
}

Complex F_factor(const PrimeTable& table, Complex z) {
    if (std::abs(z) > 10.0) throw std::domain_error("F_factor: |z| > 10");
    return F_factor_raw(table, z);
}

double c_k_estimate(double k, std::uint64_t x) {
    if (!(k > 0.0) || k > 4.0) throw std::domain_error("c_k_estimate: need 0 < k <= 4");
    if (x < 1000) throw std::domain_error("c_k_estimate: x < 1e3");
    const PrimeTable table = sieve(x);
    return std::real(F_factor(table, Complex(k, 0.0)));
}

std::vector<double> bessel_decay_check(const PrimeTable& table, double re_z,
                                       const std::vector<double>& im_grid) {
    if (im_grid.empty()) throw std::domain_error("bessel_decay_check: empty grid");
    double im_min = im_grid.front(), im_max = im_grid.front();
    for (double y : im_grid) {
        im_min = std::min(im_min, std::fabs(y));
        im_max = std::max(im_max, std::fabs(y));
    }
    const double window = std::pow(static_cast<double>(table.x_limit), 0.125);
    if (!(re_z >= 0.0) || 4.0 * re_z * re_z > im_min * im_min || im_max > window)
        throw std::domain_error("bessel_decay_check: grid outside the decay window");

    std::vector<double> out;
    out.reserve(im_grid.size());
    for (double y : im_grid) {
        const Complex z(re_z, y);
        double log_abs = 0.0;
        for (double inv_sqrt : table.inv_sqrt)
            log_abs += std::log(std::abs(bessel_i0(z * inv_sqrt)));
        out.push_back(std::exp(log_abs));
    }
    return out;
}

double saddle_tail_model(const std::function<Complex(Complex)>& F, double sigma,
                         double delta, double psi, SaddleAbscissa abscissa) {
    if (!(delta > 0.0)) throw std::domain_error("saddle_tail: delta <= 0");
    if (!(psi >= 5.0)) throw std::domain_error("saddle_tail: psi < 5");
    const double c = abscissa == SaddleAbscissa::ratio ? delta / sigma
                                                       : delta / std::sqrt(sigma);
    if (!(c > 0.0) || c > 4.0)
        throw std::domain_error("saddle_tail: abscissa out of range (c > 4)");
    const double a = delta * sigma;  // tail threshold in raw units

    double prev = 0.0;
    for (std::size_t n = 64; n <= 4096; n *= 2) {
        const double cur = saddle_line_integral(F, sigma, a, c, psi, n);
        if (n > 64 && std::fabs(cur - prev) <= 1e-6 * std::fabs(cur)) return cur;
        prev = cur;
    }
    throw std::runtime_error("saddle_tail: quadrature did not stabilize");
}

double saddle_tail(const PrimeTable& table, double delta, double psi,
                   SaddleAbscissa abscissa) {
    const double sigma = std::sqrt(sigma_sq(table));
    return saddle_tail_model(
        [&table](Complex s) { return F_factor_raw(table, s); }, sigma, delta, psi,
        abscissa);
}

std::vector<HwangPoint> hwang_check(const std::vector<double>& amplitudes,
                                    std::size_t replicas,
                                    const std::vector<double>& delta_grid,
                                    std::uint64_t seed) {
    if (amplitudes.empty() || replicas == 0 || delta_grid.empty())
        throw std::domain_error("hwang_check: empty input");
    double phi = 0.0;
    for (double a : amplitudes) phi += 0.5 * a * a;
    const double scale = std::sqrt(phi);

    std::vector<double> thresholds;
    thresholds.reserve(delta_grid.size());
    for (double d : delta_grid) thresholds.push_back(d * scale);

    const std::size_t chunk = 16384;
    const std::size_t nchunks = (replicas + chunk - 1) / chunk;
    std::vector<std::vector<std::size_t>> counts(nchunks,
        std::vector<std::size_t>(delta_grid.size(), 0));

    parallel_chunks(replicas, chunk, [&](std::size_t ci, std::size_t lo, std::size_t hi) {
        auto& local = counts[ci];
        for (std::size_t r = lo; r < hi; ++r) {
            IndexedRng rng(seed, r);
            double sum = 0.0;
            for (double a : amplitudes)
                sum += a * std::cos(rng.next_uniform(0.0, 2.0 * M_PI));
            for (std::size_t d = 0; d < thresholds.size(); ++d)
                if (sum >= thresholds[d]) ++local[d];
        }
    });

    std::vector<HwangPoint> out;
    out.reserve(delta_grid.size());
    for (std::size_t d = 0; d < delta_grid.size(); ++d) {
        std::size_t hits = 0;
        for (const auto& local : counts) hits += local[d];
        out.push_back({delta_grid[d], gaussian_tail(delta_grid[d]),
                       static_cast<double>(hits) / static_cast<double>(replicas)});
    }
    return out;
}

DiscrepancyReport discrepancy_moments(double T, std::uint64_t x, std::size_t n,
                                      const std::vector<unsigned>& k_list,
                                      std::uint64_t seed) {
    for (unsigned k : k_list)
        if (k > 4) throw std::domain_error("discrepancy_moments: k > 4");
    if (n < 10000) throw std::domain_error("discrepancy_moments: n < 1e4");
    const PrimeTable table = sieve(x);

    const std::size_t chunk = 512;
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<std::vector<double>> sums(nchunks,
        std::vector<double>(k_list.size(), 0.0));
    std::vector<std::size_t> dropped(nchunks, 0);

    parallel_chunks(n, chunk, [&](std::size_t ci, std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            IndexedRng rng(seed, j);
            const double t = rng.next_uniform(T, 2.0 * T);
            const ZetaPoint pt = zeta_abs(t);
            if (!pt.reliable) { ++dropped[ci]; continue; }
            const double diff = std::fabs(pt.log_abs_zeta - eval_poly(table, t));
            for (std::size_t i = 0; i < k_list.size(); ++i)
                sums[ci][i] += std::pow(diff, 2.0 * k_list[i]);
        }
    });

    DiscrepancyReport rep;
    rep.k_list = k_list;
    rep.moments.assign(k_list.size(), 0.0);
    for (std::size_t ci = 0; ci < nchunks; ++ci) {
        rep.dropped += dropped[ci];
        for (std::size_t i = 0; i < k_list.size(); ++i) rep.moments[i] += sums[ci][i];
    }
    rep.kept = n - rep.dropped;
    if (rep.kept == 0) throw degeneracy_error("discrepancy_moments: all samples dropped");
    for (double& m : rep.moments) m /= static_cast<double>(rep.kept);
    return rep;
}

TailReport build_tail_report(const PrimeTable& table, const SampleBatch& batch,
                             const std::vector<double>& deltas, double psi,
                             SaddleAbscissa abscissa) {
    TailReport rep;
    rep.x = table.x_limit;
    rep.T = batch.config.T;
    rep.n_samples = batch.size();
    rep.seed = batch.config.seed;
    rep.sigma = batch.sigma;
    rep.psi = psi;
    rep.abscissa = abscissa == SaddleAbscissa::ratio ? "ratio" : "paper-literal";
    for (double d : deltas) {
        rep.delta.push_back(d);
        const auto [frac, hw] = empirical_tail(batch, d);
        rep.empirical.push_back(frac);
        rep.ci_halfwidth.push_back(hw);
        rep.gaussian.push_back(gaussian_tail(d));
        const double c = abscissa == SaddleAbscissa::ratio
                             ? d / batch.sigma
                             : d / std::sqrt(batch.sigma);
        if (c > 0.0 && c <= 4.0) {
            rep.corrected.push_back(
                std::real(F_factor(table, Complex(c, 0.0))) * gaussian_tail(d));
            rep.saddle.push_back(saddle_tail(table, d, psi, abscissa));
        } else {
            rep.corrected.push_back(std::nan(""));
            rep.saddle.push_back(std::nan(""));
        }
    }
    return rep;
}

}  // namespace selberg
