// Command-line front end: `run` executes one experiment, `compare` diffs two
// tail reports. Precedence: CLI flags > config file > defaults.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "selberg/labcli.hpp"

namespace {

void apply_config_file(const std::string& path, selberg::ExperimentConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw selberg::config_error("config file not readable: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("experiment")) cfg.experiment = j["experiment"];
    if (j.contains("x")) {
        if (j["x"].is_string()) cfg.x_spec = j["x"];
        else cfg.x_spec = std::to_string(j["x"].get<std::uint64_t>());
    }
    if (j.contains("T")) cfg.T = j["T"];
    if (j.contains("n_samples")) cfg.n_samples = j["n_samples"];
    if (j.contains("seed")) cfg.seed = j["seed"];
    if (j.contains("delta_min")) cfg.delta_min = j["delta_min"];
    if (j.contains("delta_max")) cfg.delta_max = j["delta_max"];
    if (j.contains("delta_step")) cfg.delta_step = j["delta_step"];
    if (j.contains("a_threshold_mult")) cfg.a_threshold_mult = j["a_threshold_mult"];
    if (j.contains("psi")) cfg.psi = j["psi"];
    if (j.contains("saddle_abscissa")) cfg.saddle_abscissa = j["saddle_abscissa"];
    if (j.contains("grid")) cfg.grid = j["grid"];
    if (j.contains("k_max")) cfg.k_max = j["k_max"];
    if (j.contains("replicas")) cfg.replicas = j["replicas"];
    if (j.contains("hwang_m")) cfg.hwang_m = j["hwang_m"];
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"];
    if (j.contains("format")) cfg.format = j["format"];
    if (j.contains("basename")) cfg.basename = j["basename"];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"selberg-lab: numerical experiments around Selberg's central "
                 "limit theorem for log|zeta(1/2+it)|"};
    app.require_subcommand(1);

    selberg::ExperimentConfig cfg;
    std::string config_file;

    auto* run = app.add_subcommand("run", "run one experiment");
    run->add_option("--config", config_file, "flat JSON config file");
    auto* o_exp = run->add_option("--experiment", cfg.experiment,
                                  "poly-tail|zeta-tail|moments|saddle|hwang|decay|discrepancy");
    auto* o_x = run->add_option("--x", cfg.x_spec, "prime cutoff or 'auto'");
    auto* o_T = run->add_option("--T", cfg.T, "base height, samples in [T,2T]");
    auto* o_n = run->add_option("--n", cfg.n_samples, "sample count");
    auto* o_seed = run->add_option("--seed", cfg.seed, "master RNG seed");
    auto* o_dmin = run->add_option("--delta-min", cfg.delta_min);
    auto* o_dmax = run->add_option("--delta-max", cfg.delta_max);
    auto* o_dstep = run->add_option("--delta-step", cfg.delta_step);
    auto* o_amult = run->add_option("--a-mult", cfg.a_threshold_mult,
                                    "set-A threshold multiple of loglog T");
    auto* o_psi = run->add_option("--psi", cfg.psi, "saddle truncation parameter");
    auto* o_absc = run->add_option("--saddle-abscissa", cfg.saddle_abscissa,
                                   "ratio|paper-literal");
    auto* o_grid = run->add_option("--grid", cfg.grid, "uniform-random|equispaced");
    auto* o_kmax = run->add_option("--k-max", cfg.k_max, "largest moment order");
    auto* o_rep = run->add_option("--replicas", cfg.replicas, "hwang Monte Carlo size");
    auto* o_m = run->add_option("--hwang-m", cfg.hwang_m, "number of cosine terms");
    auto* o_out = run->add_option("--out-dir", cfg.output_dir);
    auto* o_fmt = run->add_option("--format", cfg.format, "csv|json|both");
    auto* o_base = run->add_option("--basename", cfg.basename,
                                   "output basename (default: experiment-timestamp-seed)");

    std::string cmp_a, cmp_b;
    auto* cmp = app.add_subcommand("compare", "diff two tail reports on one grid");
    cmp->add_option("report_a", cmp_a)->required();
    cmp->add_option("report_b", cmp_b)->required();

    CLI11_PARSE(app, argc, argv);

    if (cmp->parsed()) return selberg::compare_reports(cmp_a, cmp_b);

    try {
        if (!config_file.empty()) {
            // re-apply CLI flags on top of the file values
            selberg::ExperimentConfig flags = cfg;
            cfg = selberg::ExperimentConfig{};
            apply_config_file(config_file, cfg);
            if (o_exp->count()) cfg.experiment = flags.experiment;
            if (o_x->count()) cfg.x_spec = flags.x_spec;
            if (o_T->count()) cfg.T = flags.T;
            if (o_n->count()) cfg.n_samples = flags.n_samples;
            if (o_seed->count()) cfg.seed = flags.seed;
            if (o_dmin->count()) cfg.delta_min = flags.delta_min;
            if (o_dmax->count()) cfg.delta_max = flags.delta_max;
            if (o_dstep->count()) cfg.delta_step = flags.delta_step;
            if (o_amult->count()) cfg.a_threshold_mult = flags.a_threshold_mult;
            if (o_psi->count()) cfg.psi = flags.psi;
            if (o_absc->count()) cfg.saddle_abscissa = flags.saddle_abscissa;
            if (o_grid->count()) cfg.grid = flags.grid;
            if (o_kmax->count()) cfg.k_max = flags.k_max;
            if (o_rep->count()) cfg.replicas = flags.replicas;
            if (o_m->count()) cfg.hwang_m = flags.hwang_m;
            if (o_out->count()) cfg.output_dir = flags.output_dir;
            if (o_fmt->count()) cfg.format = flags.format;
            if (o_base->count()) cfg.basename = flags.basename;
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return selberg::run_experiment(cfg);
}
