#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace selberg {

// Raised when a run is numerically degenerate (e.g. too many samples landed
// on zeros of Z). The CLI maps it to a distinct exit code.
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ZetaMethod { euler_maclaurin, riemann_siegel };

struct ZetaPoint {
    double t = 0.0;
    double Z = 0.0;            // Riemann-Siegel Z(t), so |zeta(1/2+it)| = |Z|
    double log_abs_zeta = 0.0;
    ZetaMethod method = ZetaMethod::riemann_siegel;
    bool reliable = true;      // false when |Z| < 1e-6 (numerical zero)
};

// Riemann-Siegel theta via the standard asymptotic expansion,
// theta(t) = (t/2)log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).
// Throws std::domain_error for t < 1.
double rs_theta(double t);

// Complex log-gamma (Lanczos); exposed because tests and the small-t branch
// both need it.
std::complex<double> log_gamma(std::complex<double> z);

// Euler-Maclaurin evaluation of zeta(s), usable at any height (cost O(|Im s|)).
std::complex<double> zeta_euler_maclaurin(std::complex<double> s);

// |zeta(1/2+it)| through Z(t): Euler-Maclaurin below t = 50, Riemann-Siegel
// main sum with correction terms beyond.
ZetaPoint zeta_abs(double t);

struct ZetaBatch {
    double T = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> t_values;
    std::vector<double> log_abs;   // log|zeta(1/2 + i t_j)|
    std::size_t redraws = 0;       // near-zero samples that were redrawn
};

// n samples of log|zeta| at uniform random heights in [T, 2T]. Near-zero
// samples are redrawn (counted); more than n/10 redraws raises
// degeneracy_error. Deterministic for fixed (T, n, seed).
ZetaBatch sample_log_zeta(double T, std::size_t n, std::uint64_t seed);

}  // namespace selberg
