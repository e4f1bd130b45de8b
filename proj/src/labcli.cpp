#include "selberg/labcli.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <json.hpp>

#include "selberg/critline.hpp"
#include "selberg/dirpoly.hpp"
#include "selberg/moments.hpp"
#include "selberg/primes.hpp"
#include "selberg/tails.hpp"

namespace selberg {

using nlohmann::json;

namespace {

std::vector<double> delta_grid(const ExperimentConfig& c) {
    std::vector<double> grid;
    for (double d = c.delta_min; d <= c.delta_max + 1e-12; d += c.delta_step)
        grid.push_back(d);
    return grid;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json config_json(const ExperimentConfig& c, std::uint64_t resolved_x) {
    return json{{"experiment", c.experiment},
                {"x", resolved_x},
                {"x_spec", c.x_spec},
                {"T", c.T},
                {"n_samples", c.n_samples},
                {"seed", c.seed},
                {"delta_min", c.delta_min},
                {"delta_max", c.delta_max},
                {"delta_step", c.delta_step},
                {"a_threshold_mult", c.a_threshold_mult},
                {"psi", c.psi},
                {"saddle_abscissa", c.saddle_abscissa},
                {"grid", c.grid},
                {"k_max", c.k_max},
                {"replicas", c.replicas},
                {"hwang_m", c.hwang_m},
                {"format", c.format}};
}

std::string output_basename(const ExperimentConfig& c) {
    if (!c.basename.empty()) return c.basename;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%S", std::gmtime(&now));
    return c.experiment + "-" + stamp + "-" + std::to_string(c.seed);
}

void write_csv(const std::string& path, const json& config,
               const std::vector<std::string>& columns,
               const std::vector<const std::vector<double>*>& data) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (auto it = config.begin(); it != config.end(); ++it)
        out << "# " << it.key() << "=" << (it->is_string() ? it->get<std::string>() : it->dump())
            << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (std::size_t row = 0; row < data[0]->size(); ++row) {
        for (std::size_t i = 0; i < data.size(); ++i)
            out << fmt((*data[i])[row]) << (i + 1 < data.size() ? "," : "\n");
    }
}

void emit(const ExperimentConfig& c, const json& config, json body,
          const std::vector<std::string>& columns,
          const std::vector<const std::vector<double>*>& data) {
    std::filesystem::create_directories(c.output_dir);
    const std::string base =
        (std::filesystem::path(c.output_dir) / output_basename(c)).string();
    body["config"] = config;
    body["seed"] = c.seed;
    if (c.format == "json" || c.format == "both") {
        std::ofstream out(base + ".json");
        out << body.dump(2) << "\n";
    }
    if (c.format == "csv" || c.format == "both")
        write_csv(base + ".csv", config, columns, data);
    std::cout << "wrote " << base << ".{";
    std::cout << (c.format == "both" ? "json,csv" : c.format) << "}\n";
}

SaddleAbscissa abscissa_of(const ExperimentConfig& c) {
    return c.saddle_abscissa == "paper-literal" ? SaddleAbscissa::paper_literal
                                                : SaddleAbscissa::ratio;
}

json tail_report_json(const TailReport& rep) {
    return json{{"delta", rep.delta},         {"empirical", rep.empirical},
                {"ci", rep.ci_halfwidth},     {"gaussian", rep.gaussian},
                {"corrected", rep.corrected}, {"saddle", rep.saddle},
                {"sigma", rep.sigma}};
}

void print_tail_summary(const TailReport& rep) {
    std::printf("%8s %12s %12s %12s %10s\n", "delta", "empirical", "Q(delta)",
                "corrected", "ratio");
    for (std::size_t i = 0; i < rep.delta.size(); ++i) {
        std::printf("%8.3f %12.6g %12.6g %12.6g %10.4f\n", rep.delta[i],
                    rep.empirical[i], rep.gaussian[i], rep.corrected[i],
                    rep.gaussian[i] > 0 ? rep.empirical[i] / rep.gaussian[i] : 0.0);
    }
}

int run_poly_tail(const ExperimentConfig& c) {
    const std::uint64_t x = resolve_x(c);
    const PrimeTable table = sieve(x);
    PolyConfig pc;
    pc.x = x;
    pc.T = c.T;
    pc.n_samples = c.n_samples;
    pc.seed = c.seed;
    pc.grid = c.grid == "equispaced" ? SampleGrid::equispaced
                                     : SampleGrid::uniform_random;
    pc.a_threshold = c.a_threshold_mult * std::log(std::log(c.T));
    const SampleBatch batch = sample_poly(pc, table);
    const TailReport rep =
        build_tail_report(table, batch, delta_grid(c), c.psi, abscissa_of(c));

    json body = tail_report_json(rep);
    body["measure_Ac"] = measure_Ac(batch);
    emit(c, config_json(c, x), body,
         {"delta", "empirical", "ci", "gaussian", "corrected", "saddle"},
         {&rep.delta, &rep.empirical, &rep.ci_halfwidth, &rep.gaussian,
          &rep.corrected, &rep.saddle});
    print_tail_summary(rep);
    if (batch.aliasing_warning) {
        std::cerr << "aliasing warning: equispaced grid too coarse for log x\n";
        return 3;
    }
    return 0;
}

int run_zeta_tail(const ExperimentConfig& c) {
    const std::uint64_t x = resolve_x(c);
    const PrimeTable table = sieve(x);
    const ZetaBatch batch = sample_log_zeta(c.T, c.n_samples, c.seed);
    const double sigma_zeta = std::sqrt(0.5 * std::log(std::log(c.T)));
    const double sigma_x = std::sqrt(sigma_sq(table));

    TailReport rep;
    rep.x = x;
    rep.T = c.T;
    rep.n_samples = c.n_samples;
    rep.seed = c.seed;
    rep.sigma = sigma_zeta;
    rep.psi = c.psi;
    for (double d : delta_grid(c)) {
        std::size_t hits = 0;
        for (double v : batch.log_abs)
            if (v >= d * sigma_zeta) ++hits;
        rep.delta.push_back(d);
        rep.empirical.push_back(static_cast<double>(hits) / c.n_samples);
        rep.ci_halfwidth.push_back(wilson_halfwidth(hits, c.n_samples));
        rep.gaussian.push_back(gaussian_tail(d));
        const double cc = d / sigma_x;
        if (cc > 0.0 && cc <= 4.0) {
            rep.corrected.push_back(
                std::real(F_factor(table, Complex(cc, 0.0))) * gaussian_tail(d));
            rep.saddle.push_back(saddle_tail(table, d, c.psi, abscissa_of(c)));
        } else {
            rep.corrected.push_back(std::nan(""));
            rep.saddle.push_back(std::nan(""));
        }
    }
    json body = tail_report_json(rep);
    body["redraws"] = batch.redraws;
    emit(c, config_json(c, x), body,
         {"delta", "empirical", "ci", "gaussian", "corrected", "saddle"},
         {&rep.delta, &rep.empirical, &rep.ci_halfwidth, &rep.gaussian,
          &rep.corrected, &rep.saddle});
    print_tail_summary(rep);
    return 0;
}

int run_moments(const ExperimentConfig& c) {
    const std::uint64_t x = resolve_x(c);
    const PrimeTable table = sieve(x);
    MomentTable mt;
    if (c.n_samples > 0) {
        PolyConfig pc;
        pc.x = x;
        pc.T = c.T;
        pc.n_samples = c.n_samples;
        pc.seed = c.seed;
        pc.a_threshold = c.a_threshold_mult * std::log(std::log(c.T));
        const SampleBatch batch = sample_poly(pc, table);
        mt = build_moment_table(table, c.k_max, &batch);
    } else {
        mt = build_moment_table(table, c.k_max);
    }
    std::vector<double> ks(mt.exact.size());
    for (std::size_t k = 0; k < ks.size(); ++k) ks[k] = static_cast<double>(k);
    emit(c, config_json(c, x),
         json{{"k", ks}, {"exact", mt.exact}, {"empirical", mt.empirical},
              {"stderr", mt.stderr_}},
         {"k", "exact", "empirical", "stderr"},
         {&ks, &mt.exact, &mt.empirical, &mt.stderr_});
    std::printf("%4s %16s %16s %12s\n", "k", "exact", "empirical", "stderr");
    for (std::size_t k = 0; k < ks.size(); ++k)
        std::printf("%4zu %16.10g %16.10g %12.4g\n", k, mt.exact[k], mt.empirical[k],
                    mt.stderr_[k]);
    return 0;
}

int run_saddle(const ExperimentConfig& c) {
    const std::uint64_t x = resolve_x(c);
    const PrimeTable table = sieve(x);
    const double sigma = std::sqrt(sigma_sq(table));
    std::vector<double> deltas = delta_grid(c), gpart, corrected, saddle;
    for (double d : deltas) {
        gpart.push_back(gaussian_tail(d));
        const double cc = abscissa_of(c) == SaddleAbscissa::ratio
                              ? d / sigma
                              : d / std::sqrt(sigma);
        if (d > 0.0 && cc <= 4.0) {
            corrected.push_back(std::real(F_factor(table, Complex(cc, 0.0))) *
                                gaussian_tail(d));
            saddle.push_back(saddle_tail(table, d, c.psi, abscissa_of(c)));
        } else {
            corrected.push_back(std::nan(""));
            saddle.push_back(std::nan(""));
        }
    }
    emit(c, config_json(c, x),
         json{{"delta", deltas}, {"gaussian", gpart}, {"corrected", corrected},
              {"saddle", saddle}, {"sigma", sigma}},
         {"delta", "gaussian", "corrected", "saddle"},
         {&deltas, &gpart, &corrected, &saddle});
    std::printf("%8s %12s %12s %12s %10s\n", "delta", "Q(delta)", "corrected",
                "saddle", "sad/corr");
    for (std::size_t i = 0; i < deltas.size(); ++i)
        std::printf("%8.3f %12.6g %12.6g %12.6g %10.5f\n", deltas[i], gpart[i],
                    corrected[i], saddle[i], saddle[i] / corrected[i]);
    return 0;
}

int run_hwang(const ExperimentConfig& c) {
    const std::vector<double> amplitudes(c.hwang_m, 1.0);
    const std::vector<double> deltas = delta_grid(c);
    const auto points = hwang_check(amplitudes, c.replicas, deltas, c.seed);
    std::vector<double> ds, pred, sim;
    for (const auto& p : points) {
        ds.push_back(p.delta);
        pred.push_back(p.predicted);
        sim.push_back(p.simulated);
    }
    emit(c, config_json(c, 0),
         json{{"delta", ds}, {"predicted", pred}, {"simulated", sim}},
         {"delta", "predicted", "simulated"}, {&ds, &pred, &sim});
    std::printf("%8s %12s %12s %10s\n", "delta", "predicted", "simulated", "ratio");
    for (const auto& p : points)
        std::printf("%8.3f %12.6g %12.6g %10.4f\n", p.delta, p.predicted,
                    p.simulated, p.simulated > 0 ? p.predicted / p.simulated : 0.0);
    return 0;
}

int run_decay(const ExperimentConfig& c) {
    const std::uint64_t x = resolve_x(c);
    const PrimeTable table = sieve(x);
    std::vector<double> grid = delta_grid(c);
    const auto values = bessel_decay_check(table, 0.0, grid);
    std::vector<double> logs;
    for (double v : values) logs.push_back(std::log(v));
    emit(c, config_json(c, x),
         json{{"im", grid}, {"abs_product", values}, {"log_abs", logs}},
         {"im", "abs_product", "log_abs"}, {&grid, &values, &logs});
    return 0;
}

int run_discrepancy(const ExperimentConfig& c) {
    const std::uint64_t x = resolve_x(c);
    std::vector<unsigned> k_list;
    for (unsigned k = 0; k <= std::min(c.k_max, 4u); ++k) k_list.push_back(k);
    const auto rep = discrepancy_moments(c.T, x, c.n_samples, k_list, c.seed);
    std::vector<double> ks;
    for (unsigned k : rep.k_list) ks.push_back(k);
    json body{{"k", ks}, {"moment", rep.moments}, {"dropped", rep.dropped},
              {"kept", rep.kept}};
    emit(c, config_json(c, x), body, {"k", "moment"}, {&ks, &rep.moments});
    std::printf("%4s %16s   (dropped %zu of %zu)\n", "k", "E|diff|^{2k}",
                rep.dropped, c.n_samples);
    for (std::size_t i = 0; i < ks.size(); ++i)
        std::printf("%4g %16.8g\n", ks[i], rep.moments[i]);
    return 0;
}

}  // namespace

void validate_config(const ExperimentConfig& c) {
    static const std::set<std::string> experiments{
        "poly-tail", "zeta-tail", "moments", "saddle",
        "hwang",     "decay",     "discrepancy"};
    if (!experiments.count(c.experiment))
        throw config_error("experiment: unknown value '" + c.experiment + "'");
    if (c.x_spec != "auto") {
        char* end = nullptr;
        const auto v = std::strtoull(c.x_spec.c_str(), &end, 10);
        if (*end != '\0' || v < 2)
            throw config_error("x: expected integer >= 2 or 'auto', got '" +
                               c.x_spec + "'");
    }
    if (!(c.delta_min < c.delta_max))
        throw config_error("delta_min/delta_max: require delta_min < delta_max");
    if (!(c.delta_step > 0.0)) throw config_error("delta_step: must be > 0");
    if (!(c.T > std::exp(1.0)))
        throw config_error("T: must exceed e so loglog T is defined");
    if ((c.experiment == "zeta-tail" || c.experiment == "discrepancy") && c.T < 1e3)
        throw config_error("T: zeta sampling requires T >= 1e3");
    if (c.format != "csv" && c.format != "json" && c.format != "both")
        throw config_error("format: must be csv, json, or both");
    if (c.saddle_abscissa != "ratio" && c.saddle_abscissa != "paper-literal")
        throw config_error("saddle-abscissa: must be ratio or paper-literal");
    if (c.grid != "uniform-random" && c.grid != "equispaced")
        throw config_error("grid: must be uniform-random or equispaced");
}

std::uint64_t resolve_x(const ExperimentConfig& c) {
    if (c.x_spec == "auto") return default_x(c.T);
    return std::strtoull(c.x_spec.c_str(), nullptr, 10);
}

int run_experiment(const ExperimentConfig& c) {
    try {
        validate_config(c);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (c.experiment == "poly-tail") return run_poly_tail(c);
        if (c.experiment == "zeta-tail") return run_zeta_tail(c);
        if (c.experiment == "moments") return run_moments(c);
        if (c.experiment == "saddle") return run_saddle(c);
        if (c.experiment == "hwang") return run_hwang(c);
        if (c.experiment == "decay") return run_decay(c);
        return run_discrepancy(c);
    } catch (const degeneracy_error& e) {
        std::cerr << "numerical degeneracy: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int compare_reports(const std::string& path_a, const std::string& path_b) {
    json a, b;
    try {
        std::ifstream fa(path_a), fb(path_b);
        fa >> a;
        fb >> b;
    } catch (const std::exception& e) {
        std::cerr << "compare: cannot read inputs: " << e.what() << "\n";
        return 2;
    }
    if (!a.contains("delta") || !b.contains("delta") || a["delta"] != b["delta"]) {
        std::cerr << "compare: delta grids differ\n";
        return 2;
    }
    const std::vector<double> deltas = a["delta"];
    const std::vector<std::string> cols{"empirical", "gaussian", "corrected",
                                        "saddle"};
    std::printf("%8s", "delta");
    for (const auto& col : cols) std::printf(" %12s", (col + " b/a").c_str());
    std::printf("\n");
    double max_dev = 0.0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        std::printf("%8.3f", deltas[i]);
        for (const auto& col : cols) {
            double ratio = std::nan("");
            if (a.contains(col) && b.contains(col) && !a[col][i].is_null() &&
                !b[col][i].is_null()) {
                const double va = a[col][i], vb = b[col][i];
                ratio = va != 0.0 ? vb / va : std::nan("");
                if (col == "empirical" && std::isfinite(ratio))
                    max_dev = std::max(max_dev, std::fabs(ratio - 1.0));
            }
            std::printf(" %12.6f", ratio);
        }
        std::printf("\n");
    }
    std::printf("max |empirical ratio - 1| = %.6g\n", max_dev);

    // which model column tracks the measured tail better, per report
    for (const auto& [name, rep] : {std::pair<std::string, json&>{"a", a}, {"b", b}}) {
        if (!rep.contains("empirical") || !rep.contains("corrected")) continue;
        std::size_t closer = 0, total = 0;
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            if (rep["corrected"][i].is_null()) continue;
            const double emp = rep["empirical"][i];
            if (std::fabs(static_cast<double>(rep["corrected"][i]) - emp) <
                std::fabs(static_cast<double>(rep["gaussian"][i]) - emp))
                ++closer;
            ++total;
        }
        if (total > 0)
            std::printf("report %s: corrected closer than gaussian at %zu/%zu points\n",
                        name.c_str(), closer, total);
    }
    return 0;
}

std::vector<std::string> validate_against_schema(const std::string& json_path,
                                                 const std::string& schema_path) {
    std::vector<std::string> violations;
    json doc, schema;
    try {
        std::ifstream fd(json_path), fs(schema_path);
        fd >> doc;
        fs >> schema;
    } catch (const std::exception& e) {
        violations.push_back(std::string("unreadable input: ") + e.what());
        return violations;
    }
    const json required = schema.value("required", json::array());
    for (const auto& req : required)
        if (!doc.contains(req.get<std::string>()))
            violations.push_back("missing required field: " + req.get<std::string>());
    const json properties = schema.value("properties", json::object());
    for (const auto& [key, prop] : properties.items()) {
        if (!doc.contains(key)) continue;
        const std::string want = prop.value("type", "");
        const auto& val = doc[key];
        const bool ok = (want == "array" && val.is_array()) ||
                        (want == "object" && val.is_object()) ||
                        (want == "number" && val.is_number()) ||
                        (want == "integer" && val.is_number_integer()) ||
                        (want == "string" && val.is_string()) || want.empty();
        if (!ok) violations.push_back("field '" + key + "' is not a " + want);
    }
    return violations;
}

}  // namespace selberg
