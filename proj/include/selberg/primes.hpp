#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace selberg {

// Ordered primes <= x_limit with the derived quantities every experiment
// needs: 1/sqrt(p), log p, sum of 1/p and of 1/p^2.
struct PrimeTable {
    std::uint64_t x_limit = 0;
    std::vector<std::uint64_t> primes;
    std::vector<double> inv_sqrt;
    std::vector<double> log_p;
    double sum_recip = 0.0;
    double sum_recip_sq = 0.0;

    std::size_t size() const { return primes.size(); }
    bool empty() const { return primes.empty(); }
};

// Segmented sieve of Eratosthenes. Memory O(sqrt(x) + segment) during the
// sieve itself. Throws std::domain_error for x < 2.
PrimeTable sieve(std::uint64_t x, std::size_t segment_size = std::size_t{1} << 20);

// sigma^2(x) = (1/2) * sum_{p<=x} 1/p.
double sigma_sq(const PrimeTable& table);

// Exact rational with 64-bit numerator/denominator, kept reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// f(p^a) = 2^{-a} * binom(a, a/2), zero for odd a; multiplicative.
// Input is a factorization as (prime, exponent) pairs. Exact up to total
// exponent 60; std::domain_error beyond, std::invalid_argument for a
// non-prime base.
Rational multiplicative_f(std::span<const std::pair<std::uint64_t, unsigned>> factors);

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

// Binary prime cache: magic "SLPT", version u32, x_limit u64, count u64,
// then u32 gaps from the previous prime (first gap counted from 0).
void save_prime_cache(const PrimeTable& table, const std::string& path);
PrimeTable load_prime_cache(const std::string& path);

}  // namespace selberg
