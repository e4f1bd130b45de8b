#include "selberg/critline.hpp"

#include <cmath>

#include "selberg/parallel.hpp"
#include "selberg/rng.hpp"

namespace selberg {

namespace {

// Taylor tables (about p = 1/2) for the Riemann-Siegel correction terms
// C0(p) = Psi(p), C1 = -Psi'''/(96 pi^2), C2 = Psi''/(64 pi^2) + Psi^(6)/(18432 pi^4),
// where Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p). Truncation error
// below 1e-19 on [0, 1].
static const double kC0[] = {
    0.382683432365089772,
    0.0,
    1.74896187231008180,
    0.0,
    2.11802520768549637,
    0.0,
    -0.870721667051148074,
    0.0,
    -3.47331122434651671,
    0.0,
    -1.66269473089993245,
    0.0,
    1.21673128891923213,
    0.0,
    1.30143041610079758,
    0.0,
    0.0305110218273616724,
    0.0,
    -0.375580305154509524,
    0.0,
    -0.108578441656406597,
    0.0,
    0.0518329029995496234,
    0.0,
    0.0299994806199022759,
    0.0,
    -0.00227593967061256423,
    0.0,
    -0.00438264741658033831,
    0.0,
    -0.000406423018372984699,
    0.0,
    0.000400609778542211393,
    0.0,
    0.0000897105799138884130,
    0.0,
    -0.0000230256500272391071,
    0.0,
    -9.38000660190679248e-6,
    0.0,
    6.32351494760910750e-7,
    0.0,
    6.55102281923150167e-7,
    0.0,
    2.21052374555269726e-8,
};
static const double kC1[] = {
    0.0,
    -0.0536502052567506941,
    0.0,
    0.110278187410814824,
    0.0,
    1.23172001543152263,
    0.0,
    1.26349648627994579,
    0.0,
    -1.69510899755950302,
    0.0,
    -2.99987119676501009,
    0.0,
    -0.108199449598992086,
    0.0,
    1.94076629462127127,
    0.0,
    0.783842356150068653,
    0.0,
    -0.505482966790036592,
    0.0,
    -0.384507234960579741,
    0.0,
    0.0374726464653153207,
    0.0,
    0.0909202661097317632,
    0.0,
    0.0104492375500645092,
    0.0,
    -0.0125829796515834165,
    0.0,
    -0.00339950372115127409,
    0.0,
    0.00104109505377148913,
    0.0,
    0.000501094905111848686,
    0.0,
    -0.0000395635966900318156,
    0.0,
    -0.0000476245924535718964,
    0.0,
    -1.85393553380851323e-6,
    0.0,
    3.19369180800689720e-6,
    0.0,
};
static const double kC2[] = {
    0.00518854283029316849,
    0.0,
    0.00123786335522538984,
    0.0,
    -0.181375057251669974,
    0.0,
    0.142914927485321265,
    0.0,
    1.33033917666875653,
    0.0,
    0.352247235340373368,
    0.0,
    -2.42100159589195072,
    0.0,
    -1.67607870225381089,
    0.0,
    1.36894167233283722,
    0.0,
    1.55390194302229832,
    0.0,
    -0.172216427347299805,
    0.0,
    -0.635906805504543099,
    0.0,
    -0.0991164987304120811,
    0.0,
    0.140334800673870090,
    0.0,
    0.0478235201982729224,
    0.0,
    -0.0173560406414797808,
    0.0,
    -0.0102250125340285918,
    0.0,
    0.000927414915979488790,
    0.0,
    0.00135721943723733853,
    0.0,
    0.0000641369012029388009,
    0.0,
    -0.000123008056981966299,
    0.0,
    -0.0000183135074047892026,
    0.0,
    7.82162860432262731e-6,
};

double horner(const double* c, std::size_t n, double u) {
    double acc = 0.0;
    for (std::size_t k = n; k-- > 0;) acc = acc * u + c[k];
    return acc;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Z(t) by the Riemann-Siegel formula with correction terms C0..C2.
double riemann_siegel_z(double t) {
    const double a = std::sqrt(t / kTwoPi);
    const std::uint64_t N = static_cast<std::uint64_t>(a);
    const double p = a - static_cast<double>(N);
    const double theta = rs_theta(t);

    double sum = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        sum += std::cos(theta - t * std::log(nd)) / std::sqrt(nd);
    }
    sum *= 2.0;

    const double u = p - 0.5;
    const double q = std::sqrt(kTwoPi / t);  // (2 pi / t)^{1/2}
    const double corr = horner(kC0, std::size(kC0), u)
                      + q * horner(kC1, std::size(kC1), u)
                      + q * q * horner(kC2, std::size(kC2), u);
    const double sign = (N % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N-1}
    return sum + sign * std::sqrt(q) * corr;
}

constexpr double kBernoulli[] = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};

}  // namespace

double rs_theta(double t) {
    if (t < 1.0) throw std::domain_error("rs_theta: t < 1");
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - M_PI / 8.0
         + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

std::complex<double> log_gamma(std::complex<double> z) {
    // Lanczos, g = 7, 9 terms
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,   676.5203681218851,   -1259.1392167224028,
        771.32342877765313,    -176.61502916214059, 12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return std::log(M_PI / std::sin(M_PI * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const std::complex<double> w = z + g + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(w) - w + std::log(x);
}

std::complex<double> zeta_euler_maclaurin(std::complex<double> s) {
    const double height = std::fabs(s.imag());
    const std::uint64_t N = 24 + static_cast<std::uint64_t>(height);
    const double Nd = static_cast<double>(N);

    std::complex<double> sum = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        sum += std::exp(-s * std::log(nd));
    }
    const std::complex<double> Npow = std::exp(-s * std::log(Nd));  // N^{-s}
    sum += Npow * Nd / (s - 1.0);
    sum -= 0.5 * Npow;

    std::complex<double> poch = s;          // s (s+1) ... (s+2k-2)
    double fact = 2.0;                      // (2k)!
    double Npw = 1.0 / Nd;                  // N^{-(2k-1)}
    for (int k = 1; k <= 10; ++k) {
        sum += kBernoulli[k - 1] / fact * poch * Npow * Npw;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        Npw /= Nd * Nd;
    }
    return sum;
}

ZetaPoint zeta_abs(double t) {
    if (!(t > 0.0) || t > 1e10) throw std::domain_error("zeta_abs: t out of range");
    ZetaPoint out;
    out.t = t;
    if (t < 50.0) {
        out.method = ZetaMethod::euler_maclaurin;
        const std::complex<double> z = zeta_euler_maclaurin({0.5, t});
        const double theta = std::imag(log_gamma({0.25, 0.5 * t})) - 0.5 * t * std::log(M_PI);
        out.Z = std::real(std::exp(std::complex<double>(0.0, theta)) * z);
    } else {
        out.method = ZetaMethod::riemann_siegel;
        out.Z = riemann_siegel_z(t);
    }
    const double absZ = std::fabs(out.Z);
    out.reliable = absZ >= 1e-6;
    out.log_abs_zeta = std::log(absZ);
    return out;
}

ZetaBatch sample_log_zeta(double T, std::size_t n, std::uint64_t seed) {
    if (!(T >= 1e3)) throw std::domain_error("sample_log_zeta: T < 1e3");
    if (n < 1) throw std::domain_error("sample_log_zeta: n < 1");

    ZetaBatch batch;
    batch.T = T;
    batch.seed = seed;
    batch.t_values.resize(n);
    batch.log_abs.resize(n);

    const std::size_t chunk = 1024;
    std::vector<std::size_t> redraws((n + chunk - 1) / chunk, 0);
    parallel_chunks(n, chunk, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            IndexedRng rng(seed, j);
            for (int attempt = 0;; ++attempt) {
                const double t = rng.next_uniform(T, 2.0 * T);
                const ZetaPoint pt = zeta_abs(t);
                if (pt.reliable || attempt >= 64) {
                    batch.t_values[j] = t;
                    batch.log_abs[j] = pt.log_abs_zeta;
                    break;
                }
                ++redraws[c];
            }
        }
    });
    for (std::size_t r : redraws) batch.redraws += r;
    if (batch.redraws > n / 10)
        throw degeneracy_error("sample_log_zeta: redraw count exceeds n/10");
    return batch;
}

}  // namespace selberg
