#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace selberg {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resolved experiment configuration. `x_spec` is either a positive integer
// or "auto" (resolved through default_x(T)).
struct ExperimentConfig {
    std::string experiment;        // poly-tail | zeta-tail | moments | saddle |
                                   // hwang | decay | discrepancy
    std::string x_spec = "auto";
    double T = 1e6;
    std::size_t n_samples = 100000;
    std::uint64_t seed = 1;
    double delta_min = 0.25;
    double delta_max = 3.0;
    double delta_step = 0.25;
    double a_threshold_mult = 1.0;
    double psi = 8.0;
    std::string saddle_abscissa = "ratio";  // ratio | paper-literal
    std::string grid = "uniform-random";    // uniform-random | equispaced
    unsigned k_max = 8;
    std::size_t replicas = 1000000;
    std::size_t hwang_m = 50;
    std::string output_dir = ".";
    std::string format = "both";   // csv | json | both
    std::string basename;          // default: <experiment>-<timestamp>-<seed>
};

// Validates the config; throws config_error with a field-level diagnostic.
void validate_config(const ExperimentConfig& config);

// Resolved x (sieving cutoff).
std::uint64_t resolve_x(const ExperimentConfig& config);

// Runs the experiment, writes report files, prints a one-screen summary.
// Returns 0 on success, 2 on validation error, 3 on numerical degeneracy.
int run_experiment(const ExperimentConfig& config);

// Per-delta ratio table between two TailReport JSON files on the same grid.
// Returns 0, or 2 on grid mismatch / unreadable input.
int compare_reports(const std::string& path_a, const std::string& path_b);

// Minimal structural validation of a report JSON against the shipped schema
// (required keys and primitive types). Returns a list of violations.
std::vector<std::string> validate_against_schema(const std::string& json_path,
                                                 const std::string& schema_path);

}  // namespace selberg
