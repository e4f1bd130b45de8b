#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selberg/primes.hpp"

namespace selberg {

enum class SampleGrid { uniform_random, equispaced };

struct PolyConfig {
    std::uint64_t x = 2;          // prime cutoff
    double T = 0.0;               // base height, samples live in [T, 2T]
    std::size_t n_samples = 1;
    std::uint64_t seed = 0;
    SampleGrid grid = SampleGrid::uniform_random;
    double a_threshold = 0.0;     // set-A cutoff on |value|
};

struct SampleBatch {
    PolyConfig config;
    double sigma = 0.0;           // sigma(x), carried for tail normalization
    std::vector<double> t_values;
    std::vector<double> values;   // Re sum_{p<=x} p^{-1/2-it}
    std::vector<char> in_A;       // |value| <= a_threshold
    bool aliasing_warning = false;

    std::size_t size() const { return values.size(); }
};

// floor(T^{1/(loglog T)^2}). Throws std::domain_error for T <= e.
std::uint64_t default_x(double T);

// sum_{p<=x} cos(t log p)/sqrt(p), Kahan-compensated.
double eval_poly(const PrimeTable& table, double t);

// Batched evaluation over [T, 2T] with set-A flags. Deterministic for a
// fixed seed; the equispaced grid flags aliasing when the spacing cannot
// resolve the fastest oscillation (spacing > 2pi/(10 log x)).
SampleBatch sample_poly(const PolyConfig& config, const PrimeTable& table);

// Fraction of samples outside A.
double measure_Ac(const SampleBatch& batch);

// CSV export (`t,value,in_A`) plus a JSON sidecar carrying the config.
void write_batch_csv(const SampleBatch& batch, const std::string& csv_path,
                     const std::string& json_sidecar_path);

}  // namespace selberg
