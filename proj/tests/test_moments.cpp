#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "selberg/moments.hpp"
#include "selberg/rng.hpp"
#include "test_oracles.hpp"

using selberg::Complex;

// closed-form value of (1/T) int_T^{2T} prod cos(t log p_l) dt via the
// product-to-sum expansion; used as the oracle for both evaluation paths
static double modal_oracle(const std::vector<std::uint64_t>& primes, double T) {
    const std::size_t k = primes.size();
    double total = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        long double omega = 0.0L;
        // track exact balance per prime: frequency is zero iff each prime
        // appears with equal +/- counts
        bool balanced = true;
        for (std::size_t i = 0; i < k && balanced; ++i) {
            int net = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (primes[j] == primes[i]) net += (mask >> j & 1) ? 1 : -1;
            if (net != 0) balanced = false;
        }
        if (balanced) {
            total += 1.0;
        } else {
            for (std::size_t j = 0; j < k; ++j)
                omega += ((mask >> j & 1) ? 1.0L : -1.0L) * logl((long double)primes[j]);
            double w = (double)omega;
            total += (std::sin(2 * T * w) - std::sin(T * w)) / (T * w);
        }
    }
    return total / std::pow(2.0, (double)k);
}

TEST_CASE("cosine_product_integral pinned cases") {
    CHECK(selberg::cosine_product_integral({2, 2}, 1e6) ==
          doctest::Approx(0.5).epsilon(2e-3));
    CHECK(std::abs(selberg::cosine_product_integral({2, 3}, 1e6)) < 1e-3);
    CHECK(std::abs(selberg::cosine_product_integral({2}, 1e5)) < 1e-3);
    CHECK(selberg::cosine_product_integral({2, 2, 3, 3}, 1e8) ==
          doctest::Approx(0.25).epsilon(2e-3));
}

TEST_CASE("cosine_product_integral matches closed form on both paths") {
    // small panel count: quadrature path
    for (double T : {3e4, 5e4}) {
        double q = selberg::cosine_product_integral({2}, T);
        CHECK(std::abs(q - modal_oracle({2}, T)) < 1e-9);
    }
    // larger product: modal path
    for (double T : {1e5, 1e6}) {
        double m = selberg::cosine_product_integral({2, 3}, T);
        CHECK(std::abs(m - modal_oracle({2, 3}, T)) < 1e-9);
    }
    double m4 = selberg::cosine_product_integral({2, 2, 5, 7}, 3e7);
    CHECK(std::abs(m4 - modal_oracle({2, 2, 5, 7}, 3e7)) < 1e-8);
}

TEST_CASE("cosine_product_integral preconditions") {
    CHECK_THROWS(selberg::cosine_product_integral({2, 2, 2, 2, 2, 2, 2, 2, 2}, 1e9));
    CHECK_THROWS(selberg::cosine_product_integral({2, 3}, 1e3));  // T too small
}

TEST_CASE("euler_i0_product matches pairwise series multiplication") {
    auto tab = selberg::sieve(50);
    const std::size_t K = 20;
    auto prod = selberg::euler_i0_product(tab, K);
    selberg::TruncatedSeries ref(K);
    ref[0] = 1.0;
    for (std::size_t i = 0; i < tab.size(); ++i)
        ref = selberg::series_mul(
            ref, selberg::TruncatedSeries::bessel_i0_series(K, tab.inv_sqrt[i]));
    for (std::size_t k = 0; k <= K; ++k)
        CHECK(prod[k] == doctest::Approx(ref[k]).epsilon(1e-12));
}

TEST_CASE("exact_moment pinned values") {
    auto t10 = selberg::sieve(10);
    CHECK(selberg::exact_moment(t10, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(selberg::exact_moment(t10, 2) ==
          doctest::Approx(0.5880952380952381).epsilon(1e-13));
    CHECK(selberg::exact_moment(t10, 3) == 0.0);
    // m4 = 3 sigma^4 - (3/8) sum 1/p^2 for the cosine model
    CHECK(selberg::exact_moment(t10, 4) ==
          doctest::Approx(0.8794982993197279).epsilon(1e-12));
    auto t1k = selberg::sieve(1000);
    CHECK(selberg::exact_moment(t1k, 2) ==
          doctest::Approx(selberg::sigma_sq(t1k)).epsilon(1e-12));
    CHECK_THROWS_AS((void)selberg::exact_moment(t10, 201), std::domain_error);
}

TEST_CASE("Gaussian moment domination") {
    // m_{2k} <= (2k-1)!! sigma^{2k} (1 + o(1)); the correction is negative
    for (std::uint64_t x : {100ull, 1000ull}) {
        auto tab = selberg::sieve(x);
        double s2 = selberg::sigma_sq(tab);
        double dfact = 1.0;
        for (unsigned k = 1; k <= 5; ++k) {
            dfact *= (2 * k - 1);
            double m = selberg::exact_moment(tab, 2 * k);
            CHECK(m <= dfact * std::pow(s2, (double)k) * (1.0 + 1e-12));
            CHECK(m > 0.5 * dfact * std::pow(s2, (double)k));
        }
    }
}

TEST_CASE("contour_moment agrees with coefficient extraction") {
    selberg::IndexedRng rng(13u, 0u);
    for (int i = 0; i < 6; ++i) {
        auto x = (std::uint64_t)rng.next_uniform(10.0, 200.0);
        unsigned k = 2 * (unsigned)rng.next_uniform(1.0, 10.99);
        auto tab = selberg::sieve(x);
        double exact = selberg::exact_moment(tab, k);
        double contour = selberg::contour_moment(tab, k);
        CHECK(contour == doctest::Approx(exact).epsilon(1e-8));
    }
    // odd k: both vanish
    auto tab = selberg::sieve(50);
    CHECK(std::abs(selberg::contour_moment(tab, 3)) < 1e-10);
}

TEST_CASE("empirical_moment on a constructed batch") {
    selberg::SampleBatch batch;
    batch.sigma = 1.0;
    batch.values = {2.0, 2.0, 2.0, 2.0};
    batch.t_values = {1, 2, 3, 4};
    batch.in_A = {1, 1, 0, 0};
    auto [m2, se2] = selberg::empirical_moment(batch, 2, false);
    CHECK(m2 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(se2 == doctest::Approx(0.0).epsilon(1e-15));
    auto [mA, seA] = selberg::empirical_moment(batch, 1, true);
    CHECK(mA == doctest::Approx(2.0).epsilon(1e-15));
    batch.in_A = {0, 0, 0, 0};
    CHECK_THROWS(selberg::empirical_moment(batch, 1, true));
    CHECK_THROWS(selberg::empirical_moment(batch, 51, false));
}

TEST_CASE("mgf_from_moments reconstructs the Euler product") {
    auto t10 = selberg::sieve(10);
    auto table = selberg::build_moment_table(t10, 40);
    CHECK(std::abs(selberg::mgf_from_moments(table.exact, {0.0, 0.0}, 40) -
                   Complex{1.0, 0.0}) < 1e-15);
    auto direct = [&](Complex z) {
        Complex p{1.0, 0.0};
        for (double w : t10.inv_sqrt) p *= selberg::bessel_i0(z * w);
        return p;
    };
    for (Complex z : {Complex{0.1, 0.0}, Complex{0.5, 0.0}, Complex{0.3, 0.4},
                      Complex{0.0, 0.9}}) {
        auto got = selberg::mgf_from_moments(table.exact, z, 40);
        CHECK(std::abs(got - direct(z)) < 1e-10 * std::abs(direct(z)));
    }
    CHECK_THROWS(selberg::mgf_from_moments(table.exact, {1.5, 0.0}, 40));
}

TEST_CASE("moment table and csv") {
    auto t10 = selberg::sieve(10);
    auto table = selberg::build_moment_table(t10, 6);
    REQUIRE(table.exact.size() == 7);
    CHECK(table.x == 10);
    CHECK(table.exact[2] == doctest::Approx(0.5880952380952381).epsilon(1e-13));
    selberg::write_moment_csv(table, "moments_test.csv");
    std::ifstream in("moments_test.csv");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "k,exact,empirical,stderr");
    std::remove("moments_test.csv");
}
