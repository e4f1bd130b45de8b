#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "selberg/labcli.hpp"

using selberg::ExperimentConfig;
namespace fs = std::filesystem;

static ExperimentConfig small_poly_config(const std::string& dir,
                                          const std::string& base) {
    ExperimentConfig cfg;
    cfg.experiment = "poly-tail";
    cfg.x_spec = "100";
    cfg.T = 1e5;
    cfg.n_samples = 5000;
    cfg.seed = 11;
    cfg.delta_min = 0.5;
    cfg.delta_max = 1.5;
    cfg.delta_step = 0.5;
    cfg.a_threshold_mult = 2.0;
    cfg.output_dir = dir;
    cfg.basename = base;
    return cfg;
}

static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST_CASE("validate_config rejects bad fields") {
    ExperimentConfig cfg;
    cfg.experiment = "poly-tail";
    CHECK_NOTHROW(selberg::validate_config(cfg));
    cfg.experiment = "nonsense";
    CHECK_THROWS_AS(selberg::validate_config(cfg), selberg::config_error);
    cfg = ExperimentConfig{};
    cfg.experiment = "poly-tail";
    cfg.delta_min = 2.0;
    cfg.delta_max = 1.0;
    CHECK_THROWS_AS(selberg::validate_config(cfg), selberg::config_error);
    cfg = ExperimentConfig{};
    cfg.experiment = "moments";
    cfg.format = "pdf";
    CHECK_THROWS_AS(selberg::validate_config(cfg), selberg::config_error);
    cfg = ExperimentConfig{};
    cfg.experiment = "saddle";
    cfg.saddle_abscissa = "banana";
    CHECK_THROWS_AS(selberg::validate_config(cfg), selberg::config_error);
    cfg = ExperimentConfig{};
    cfg.experiment = "poly-tail";
    cfg.x_spec = "not-a-number";
    CHECK_THROWS_AS(selberg::validate_config(cfg), selberg::config_error);
    cfg = ExperimentConfig{};
    cfg.experiment = "poly-tail";
    cfg.T = 1.0;
    CHECK_THROWS_AS(selberg::validate_config(cfg), selberg::config_error);
}

TEST_CASE("resolve_x") {
    ExperimentConfig cfg;
    cfg.experiment = "poly-tail";
    cfg.x_spec = "auto";
    cfg.T = 1e6;
    CHECK(selberg::resolve_x(cfg) == 7);
    cfg.x_spec = "1234";
    CHECK(selberg::resolve_x(cfg) == 1234);
}

TEST_CASE("run_experiment returns 2 on invalid config") {
    ExperimentConfig cfg;
    cfg.experiment = "no-such-experiment";
    CHECK(selberg::run_experiment(cfg) == 2);
}

TEST_CASE("poly-tail experiment writes valid, reproducible reports") {
    fs::path dir = fs::temp_directory_path() / "selberg_labcli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    auto cfg = small_poly_config(dir.string(), "runA");
    REQUIRE(selberg::run_experiment(cfg) == 0);
    fs::path json_path = dir / "runA.json";
    fs::path csv_path = dir / "runA.csv";
    REQUIRE(fs::exists(json_path));
    REQUIRE(fs::exists(csv_path));

    auto j = nlohmann::json::parse(slurp(json_path));
    CHECK(j["config"]["x"] == 100);
    CHECK(j["seed"] == 11);
    CHECK(j["delta"].size() == 3);
    CHECK(j["empirical"].size() == 3);

    auto violations = selberg::validate_against_schema(
        json_path.string(),
        std::string(TEST_SOURCE_DIR) + "/schemas/tail_report.schema.json");
    for (const auto& v : violations) MESSAGE(v);
    CHECK(violations.empty());

    // byte-identical rerun
    auto cfg2 = small_poly_config(dir.string(), "runB");
    REQUIRE(selberg::run_experiment(cfg2) == 0);
    CHECK(slurp(csv_path) == slurp(dir / "runB.csv"));

    // different seed -> different empirical column
    auto cfg3 = small_poly_config(dir.string(), "runC");
    cfg3.seed = 12;
    REQUIRE(selberg::run_experiment(cfg3) == 0);
    CHECK(slurp(csv_path) != slurp(dir / "runC.csv"));

    // compare: same grid -> 0
    CHECK(selberg::compare_reports(json_path.string(), (dir / "runC.json").string()) == 0);

    // compare: mismatched grid -> 2
    auto cfg4 = small_poly_config(dir.string(), "runD");
    cfg4.delta_max = 2.5;
    REQUIRE(selberg::run_experiment(cfg4) == 0);
    CHECK(selberg::compare_reports(json_path.string(), (dir / "runD.json").string()) == 2);

    fs::remove_all(dir);
}

TEST_CASE("moments experiment output is readable") {
    fs::path dir = fs::temp_directory_path() / "selberg_labcli_moments";
    fs::remove_all(dir);
    fs::create_directories(dir);
    ExperimentConfig cfg;
    cfg.experiment = "moments";
    cfg.x_spec = "10";
    cfg.T = 1e5;
    cfg.n_samples = 2000;
    cfg.k_max = 6;
    cfg.output_dir = dir.string();
    cfg.basename = "mom";
    REQUIRE(selberg::run_experiment(cfg) == 0);
    auto j = nlohmann::json::parse(slurp(dir / "mom.json"));
    CHECK(j["exact"][2].get<double>() == doctest::Approx(0.5880952380952381).epsilon(1e-12));
    fs::remove_all(dir);
}

TEST_CASE("schema validation flags a broken report") {
    fs::path dir = fs::temp_directory_path() / "selberg_labcli_schema";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << R"({"config": {}, "delta": "oops"})";
    auto violations = selberg::validate_against_schema(
        bad.string(), std::string(TEST_SOURCE_DIR) + "/schemas/tail_report.schema.json");
    CHECK(!violations.empty());
    fs::remove_all(dir);
}
