#include "selberg/numkit.hpp"

#include <cmath>
#include <stdexcept>

namespace selberg {

namespace {

Complex i0_series(Complex z) {
    const Complex q = z * z * 0.25;
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int n = 1; n < 200; ++n) {
        term *= q / static_cast<double>(n * n);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// I0(z) ~ e^z/sqrt(2 pi z) * sum a_k/z^k + i e^{-z}/sqrt(2 pi z) * sum (-1)^k a_k/z^k,
// a_k = ((2k-1)!!)^2 / (k! 8^k), valid for Re z >= 0.  The subdominant term only
// matters near the imaginary axis.
Complex i0_asymptotic(Complex z) {
    Complex grow(1.0, 0.0), decay(1.0, 0.0), term(1.0, 0.0);
    for (int k = 1; k <= 24; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= odd * odd / (8.0 * k) / z;
        grow += term;
        decay += (k % 2 ? -term : term);
    }
    const Complex pref = 1.0 / std::sqrt(2.0 * M_PI * z);
    Complex out = pref * std::exp(z) * grow;
    if (z.real() < 40.0)
        out += pref * Complex(0.0, 1.0) * std::exp(-z) * decay;
    return out;
}

}  // namespace

Complex bessel_i0(Complex z) {
    const double az = std::abs(z);
    if (!(az <= 1e6)) throw std::domain_error("bessel_i0: |z| out of range");
    if (az <= 30.0) return i0_series(z);
    if (z.real() < 0.0) z = -z;  // I0 is even
    if (z.real() > 700.0) throw std::range_error("bessel_i0: overflow");
    return i0_asymptotic(z);
}

double bessel_i0(double x) {
    x = std::fabs(x);
    if (!(x <= 1e6)) throw std::domain_error("bessel_i0: |x| out of range");
    if (x <= 30.0) return i0_series(Complex(x, 0.0)).real();
    if (x > 700.0) throw std::range_error("bessel_i0: overflow");
    return i0_asymptotic(Complex(x, 0.0)).real();
}

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty");
}

Complex TruncatedSeries::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

TruncatedSeries TruncatedSeries::bessel_i0_series(std::size_t degree, double scale) {
    if (!(scale > 0.0)) throw std::domain_error("bessel_i0_series: scale must be positive");
    TruncatedSeries s(degree);
    s[0] = 1.0;
    const double q = scale * scale * 0.25;
    double c = 1.0;
    for (std::size_t n = 1; 2 * n <= degree; ++n) {
        c *= q / static_cast<double>(n * n);
        s[2 * n] = c;
    }
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("series_mul: degree mismatch");
    const std::size_t K = a.degree();
    TruncatedSeries out(K);
    for (std::size_t i = 0; i <= K; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; i + j <= K; ++j) out[i + j] += ai * b[j];
    }
    return out;
}

double gaussian_tail(double delta) {
    return 0.5 * std::erfc(delta * M_SQRT1_2);
}

}  // namespace selberg
