#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace selberg {

using Complex = std::complex<double>;

// Modified Bessel function of the first kind, order zero.
// Power series for |z| <= 30, large-argument asymptotic expansion beyond.
// Exactly real for real input; throws std::range_error when exp(Re z)
// overflows, std::domain_error for |z| > 1e6.
Complex bessel_i0(Complex z);
double bessel_i0(double x);

// Real-coefficient power series truncated at a fixed degree K.
// Products drop all terms above K.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree)
        : coeffs_(degree + 1, 0.0) {}
    explicit TruncatedSeries(std::vector<double> coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    double operator[](std::size_t k) const { return coeffs_[k]; }
    double& operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Horner evaluation at a complex point.
    Complex eval(Complex z) const;

    // Series of I0(a*z): coefficient of z^(2n) is (a/2)^(2n) / (n!)^2.
    static TruncatedSeries bessel_i0_series(std::size_t degree, double scale);

private:
    std::vector<double> coeffs_;
};

// Cauchy product truncated at the common degree.
// Throws std::invalid_argument on degree mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Q(delta) = integral over [delta, inf) of exp(-u^2/2)/sqrt(2*pi).
double gaussian_tail(double delta);

}  // namespace selberg
