#include "selberg/primes.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace selberg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeTable sieve(std::uint64_t x, std::size_t segment_size) {
    if (x < 2) throw std::domain_error("sieve: x < 2 yields an empty table");

    PrimeTable table;
    table.x_limit = x;

    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    std::vector<char> seg(segment_size);
    for (std::uint64_t low = 2; low <= x; low += segment_size) {
        const std::uint64_t high = std::min<std::uint64_t>(low + segment_size - 1, x);
        std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (std::uint64_t v = low; v <= high; ++v) {
            if (seg[v - low]) table.primes.push_back(v);
        }
    }

    table.inv_sqrt.reserve(table.primes.size());
    table.log_p.reserve(table.primes.size());
    for (std::uint64_t p : table.primes) {
        const double pd = static_cast<double>(p);
        table.inv_sqrt.push_back(1.0 / std::sqrt(pd));
        table.log_p.push_back(std::log(pd));
        table.sum_recip += 1.0 / pd;
        table.sum_recip_sq += 1.0 / (pd * pd);
    }
    return table;
}

double sigma_sq(const PrimeTable& table) {
    if (table.empty()) throw std::domain_error("sigma_sq: empty prime table");
    return 0.5 * table.sum_recip;
}

Rational multiplicative_f(std::span<const std::pair<std::uint64_t, unsigned>> factors) {
    unsigned total = 0;
    for (const auto& [p, a] : factors) {
        if (!is_prime_u64(p)) throw std::invalid_argument("multiplicative_f: base is not prime");
        total += a;
    }
    if (total > 60) throw std::domain_error("multiplicative_f: total exponent > 60");

    for (const auto& [p, a] : factors)
        if (a % 2 != 0) return Rational{0, 1};

    // numerator = product of binom(a, a/2); denominator = 2^total
    std::int64_t num = 1;
    for (const auto& [p, a] : factors) {
        std::int64_t binom = 1;
        for (unsigned i = 1; i <= a / 2; ++i)
            binom = binom * static_cast<std::int64_t>(a / 2 + i) / static_cast<std::int64_t>(i);
        num *= binom;
    }
    std::int64_t den = 1;
    for (unsigned i = 0; i < total; ++i) den *= 2;
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

void save_prime_cache(const PrimeTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_prime_cache: cannot open " + path);
    out.write("SLPT", 4);
    const std::uint32_t version = 1;
    const std::uint64_t count = table.primes.size();
    out.write(reinterpret_cast<const char*>(&version), sizeof version);
    out.write(reinterpret_cast<const char*>(&table.x_limit), sizeof table.x_limit);
    out.write(reinterpret_cast<const char*>(&count), sizeof count);
    std::uint64_t prev = 0;
    for (std::uint64_t p : table.primes) {
        const std::uint32_t gap = static_cast<std::uint32_t>(p - prev);
        out.write(reinterpret_cast<const char*>(&gap), sizeof gap);
        prev = p;
    }
    if (!out) throw std::runtime_error("save_prime_cache: write failed");
}

PrimeTable load_prime_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_prime_cache: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != "SLPT")
        throw std::runtime_error("load_prime_cache: bad magic");
    std::uint32_t version = 0;
    std::uint64_t x_limit = 0, count = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    in.read(reinterpret_cast<char*>(&x_limit), sizeof x_limit);
    in.read(reinterpret_cast<char*>(&count), sizeof count);
    if (!in || version != 1) throw std::runtime_error("load_prime_cache: bad header");

    PrimeTable table;
    table.x_limit = x_limit;
    table.primes.reserve(count);
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t gap = 0;
        in.read(reinterpret_cast<char*>(&gap), sizeof gap);
        prev += gap;
        table.primes.push_back(prev);
    }
    if (!in) throw std::runtime_error("load_prime_cache: truncated file");
    for (std::uint64_t p : table.primes) {
        const double pd = static_cast<double>(p);
        table.inv_sqrt.push_back(1.0 / std::sqrt(pd));
        table.log_p.push_back(std::log(pd));
        table.sum_recip += 1.0 / pd;
        table.sum_recip_sq += 1.0 / (pd * pd);
    }
    return table;
}

}  // namespace selberg
