#pragma once

// Independent reference implementations used only by the tests. These are
// deliberately naive (direct series, trial division, O(K^2) convolution,
// long-double Euler-Maclaurin) so that agreement with the library is a real
// cross-check rather than a tautology.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

// I0 by direct power-series summation, `terms` terms.
inline std::complex<double> i0_series(std::complex<double> z, int terms = 30) {
    std::complex<double> term{1.0, 0.0}, sum{1.0, 0.0};
    const std::complex<double> q = 0.25 * z * z;
    for (int n = 1; n < terms; ++n) {
        term *= q / static_cast<double>(n * n);
        sum += term;
    }
    return sum;
}

// Full Cauchy product, truncated afterwards.
inline std::vector<double> convolve(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    std::size_t keep) {
    std::vector<double> out(keep + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= keep; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Gaussian tail by midpoint integration over [delta, delta + 40].
inline double gaussian_tail_quad(double delta) {
    const double span = 40.0;
    const int n = 400000;
    const double h = span / n;
    long double acc = 0.0L;
    for (int i = 0; i < n; ++i) {
        long double u = delta + (i + 0.5L) * h;
        acc += expl(-u * u / 2.0L);
    }
    return static_cast<double>(acc * h / sqrtl(2.0L * M_PIl));
}

inline bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Plain (non-segmented) sieve.
inline std::vector<std::uint64_t> simple_sieve(std::uint64_t x) {
    std::vector<char> comp(x + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = 1;
    }
    return out;
}

// Euler-Maclaurin zeta in long double, independent coding: larger cutoff,
// twelve Bernoulli terms.
inline std::complex<long double> zeta_em(std::complex<long double> s) {
    static const long double bern[] = {
        1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
        -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798,
        -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730};
    const long double im = s.imag() < 0 ? -s.imag() : s.imag();
    const int N = 40 + static_cast<int>(im);
    std::complex<long double> sum{0.0L, 0.0L};
    for (int n = 1; n <= N; ++n)
        sum += std::exp(-s * std::log(static_cast<long double>(n)));
    const long double Nl = N;
    std::complex<long double> Ns = std::exp(-s * std::log(Nl));
    sum += Ns * Nl / (s - 1.0L);
    sum -= 0.5L * Ns;
    // correction sum: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    std::complex<long double> rising = s;       // (s)_1
    long double fact = 2.0L;                    // (2k)!
    std::complex<long double> Npow = Ns / Nl;   // N^{-s-1}
    for (int k = 1; k <= 12; ++k) {
        sum += bern[k - 1] / fact * rising * Npow;
        // advance by two factors and two powers of N
        rising *= (s + static_cast<long double>(2 * k - 1)) *
                  (s + static_cast<long double>(2 * k));
        fact *= (2 * k + 1) * (2 * k + 2);
        Npow /= Nl * Nl;
    }
    return sum;
}

inline std::complex<double> zeta_em_d(std::complex<double> s) {
    auto r = zeta_em({(long double)s.real(), (long double)s.imag()});
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

}  // namespace oracle
