#include "selberg/dirpoly.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "selberg/parallel.hpp"
#include "selberg/rng.hpp"

namespace selberg {

std::uint64_t default_x(double T) {
    const double ll = std::log(std::log(T));
    if (!(T > 0.0) || !(ll > 0.0))
        throw std::domain_error("default_x: requires T > e");
    return static_cast<std::uint64_t>(std::floor(std::exp(std::log(T) / (ll * ll))));
}

double eval_poly(const PrimeTable& table, double t) {
    if (table.empty()) throw std::domain_error("eval_poly: empty prime table");
    if (!std::isfinite(t)) throw std::domain_error("eval_poly: t not finite");
    double sum = 0.0, comp = 0.0;  // Kahan
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double term = std::cos(t * table.log_p[i]) * table.inv_sqrt[i];
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

SampleBatch sample_poly(const PolyConfig& config, const PrimeTable& table) {
    if (table.x_limit != config.x)
        throw std::invalid_argument("sample_poly: table.x_limit != config.x");
    if (!(config.T > 0.0) || config.n_samples < 1 || !(config.a_threshold > 0.0))
        throw std::domain_error("sample_poly: invalid config");

    SampleBatch batch;
    batch.config = config;
    batch.sigma = std::sqrt(sigma_sq(table));
    const std::size_t n = config.n_samples;
    batch.t_values.resize(n);
    batch.values.resize(n);
    batch.in_A.resize(n);

    if (config.grid == SampleGrid::equispaced) {
        const double spacing = config.T / static_cast<double>(n);
        const double fastest = 2.0 * M_PI / (10.0 * std::log(static_cast<double>(config.x)));
        if (spacing > fastest) batch.aliasing_warning = true;
    }

    parallel_chunks(n, 4096, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            double t;
            if (config.grid == SampleGrid::uniform_random) {
                IndexedRng rng(config.seed, j);
                t = rng.next_uniform(config.T, 2.0 * config.T);
            } else {
                t = config.T + static_cast<double>(j) * config.T / static_cast<double>(n);
            }
            const double v = eval_poly(table, t);
            batch.t_values[j] = t;
            batch.values[j] = v;
            batch.in_A[j] = std::fabs(v) <= config.a_threshold ? 1 : 0;
        }
    });
    return batch;
}

double measure_Ac(const SampleBatch& batch) {
    if (batch.size() == 0) throw std::domain_error("measure_Ac: empty batch");
    std::size_t out = 0;
    for (char flag : batch.in_A)
        if (!flag) ++out;
    return static_cast<double>(out) / static_cast<double>(batch.size());
}

void write_batch_csv(const SampleBatch& batch, const std::string& csv_path,
                     const std::string& json_sidecar_path) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("write_batch_csv: cannot open " + csv_path);
    csv << "t,value,in_A\n";
    char line[80];
    for (std::size_t j = 0; j < batch.size(); ++j) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%d\n", batch.t_values[j],
                      batch.values[j], batch.in_A[j] ? 1 : 0);
        csv << line;
    }

    std::ofstream js(json_sidecar_path);
    if (!js) throw std::runtime_error("write_batch_csv: cannot open " + json_sidecar_path);
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "{\n  \"x\": %llu,\n  \"T\": %.17g,\n  \"n_samples\": %zu,\n"
                  "  \"seed\": %llu,\n  \"grid\": \"%s\",\n  \"a_threshold\": %.17g,\n"
                  "  \"aliasing_warning\": %s\n}\n",
                  static_cast<unsigned long long>(batch.config.x), batch.config.T,
                  batch.config.n_samples,
                  static_cast<unsigned long long>(batch.config.seed),
                  batch.config.grid == SampleGrid::uniform_random ? "uniform_random"
                                                                  : "equispaced",
                  batch.config.a_threshold,
                  batch.aliasing_warning ? "true" : "false");
    js << buf;
}

}  // namespace selberg
