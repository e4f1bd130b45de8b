#pragma once

#include <cstdint>

// Counter-based RNG: every sample index gets its own statistically
// independent stream derived from (master seed, index), so batches are
// reproducible regardless of thread scheduling.

namespace selberg {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class IndexedRng {
public:
    IndexedRng(std::uint64_t seed, std::uint64_t index)
        : state_(seed ^ (0x9e3779b97f4a7c15ull * (index + 1))) {
        // burn-in decorrelates nearby (seed, index) pairs
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [a, b)
    double next_uniform(double a, double b) { return a + (b - a) * next_unit(); }

private:
    std::uint64_t state_;
};

}  // namespace selberg
