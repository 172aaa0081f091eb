#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ea/errors.hpp"
#include "ea/experiments.hpp"
#include "ea/models.hpp"
#include "ea/report_io.hpp"

using namespace ea;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "ea_unit_reports";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

ExperimentConfig base_config(const std::string& model, const std::string& experiment,
                             const std::string& name) {
    ExperimentConfig cfg;
    cfg.model = model;
    cfg.experiment = experiment;
    cfg.out = (scratch_dir() / name).string();
    return cfg;
}

}  // namespace

TEST_CASE("config validation names the offending field") {
    ExperimentConfig cfg = base_config("no-such-model", "axioms", "x.json");
    CHECK_THROWS_WITH_AS(run_experiment(cfg), doctest::Contains("model:"), ConfigError);

    cfg = base_config("real-vector", "no-such-experiment", "x.json");
    CHECK_THROWS_WITH_AS(run_experiment(cfg), doctest::Contains("experiment:"), ConfigError);

    cfg = base_config("real-vector", "axioms", "x.json");
    cfg.format = "xml";
    CHECK_THROWS_WITH_AS(run_experiment(cfg), doctest::Contains("format:"), ConfigError);

    cfg = base_config("non-morphism", "distance", "x.json");
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}

TEST_CASE("axioms experiment passes and writes a complete json report") {
    ExperimentConfig cfg = base_config("real-vector", "axioms", "axioms.json");
    CHECK(run_experiment(cfg) == 0);

    const auto text = slurp(cfg.out);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.contains("config"));
    CHECK(j.contains("net"));
    CHECK(j.contains("values"));
    CHECK(j.contains("extrapolated"));
    CHECK(j.contains("rate"));
    CHECK(j.contains("pass"));
    CHECK(j["pass"].get<bool>());
    CHECK(j["net"].size() == 20);
    CHECK(j["values"].size() == 20);
    CHECK(j["config"]["seed"].get<std::uint64_t>() == 42);
}

TEST_CASE("csv header contract") {
    ExperimentConfig cfg = base_config("real-vector", "convergence", "conv.csv");
    cfg.format = "csv";
    cfg.tol = 1e-5;
    CHECK(run_experiment(cfg) == 0);
    const auto text = slurp(cfg.out);
    std::istringstream is(text);
    std::string header;
    std::getline(is, header);
    CHECK(header == "epsilon,component_0,component_1,residual");
    int rows = 0;
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 20);
}

TEST_CASE("identical config and seed produce byte-identical reports") {
    ExperimentConfig a = base_config("heisenberg-carnot", "blue-red", "br_a.json");
    ExperimentConfig b = base_config("heisenberg-carnot", "blue-red", "br_b.json");
    CHECK(run_experiment(a) == 0);
    CHECK(run_experiment(b) == 0);
    CHECK(slurp(a.out) == slurp(b.out));

    a.format = "csv";
    a.out = (scratch_dir() / "br_a.csv").string();
    b.format = "csv";
    b.out = (scratch_dir() / "br_b.csv").string();
    CHECK(run_experiment(a) == 0);
    CHECK(run_experiment(b) == 0);
    CHECK(slurp(a.out) == slurp(b.out));
}

TEST_CASE("forced-failure tolerance yields status 2 and a pass=false report") {
    ExperimentConfig cfg = base_config("real-vector", "axioms", "forced.json");
    cfg.tol = 0.0;
    CHECK(run_experiment(cfg) == 2);
    const auto j = nlohmann::json::parse(slurp(cfg.out));
    CHECK_FALSE(j["pass"].get<bool>());
}

TEST_CASE("sphere groupoid with an antipodal sample radius is a domain error") {
    ExperimentConfig cfg = base_config("sphere", "groupoid", "sphere_groupoid.json");
    cfg.sample_radius = 3.15;
    CHECK_THROWS_AS(run_experiment(cfg), DomainError);
    CHECK_FALSE(fs::exists(cfg.out));
}

TEST_CASE("blue-red on heisenberg stays within 1e-9 at every net scale") {
    ExperimentConfig cfg = base_config("heisenberg-carnot", "blue-red", "br.json");
    CHECK(run_experiment(cfg) == 0);
    const auto j = nlohmann::json::parse(slurp(cfg.out));
    for (const auto& r : j["residuals"]) CHECK(r.get<double>() <= 1e-9);
}

TEST_CASE("conical experiment reports per-law pass flags") {
    ExperimentConfig cfg = base_config("lie-exp-log", "conical", "conical.json");
    cfg.tol = 1e-7;
    CHECK(run_experiment(cfg) == 0);
    const auto j = nlohmann::json::parse(slurp(cfg.out));
    CHECK(j["pass"]["neutrality"].get<bool>());
    CHECK(j["pass"]["associativity"].get<bool>());
    CHECK(j["pass"]["inverse"].get<bool>());
    CHECK(j["pass"]["conicality"].get<bool>());
}

TEST_CASE("differential experiment on a built-in map") {
    ExperimentConfig cfg = base_config("real-vector", "differential", "diff.json");
    cfg.map = "trig-exp";
    cfg.tol = 1e-6;
    CHECK(run_experiment(cfg) == 0);
}

TEST_CASE("convergence experiment accepts every expression") {
    for (const char* expr : {"sum", "diff", "inv", "dif-target"}) {
        ExperimentConfig cfg =
            base_config("real-vector", "convergence", std::string("conv_") + expr + ".json");
        cfg.expr = expr;
        cfg.tol = 1e-5;
        CHECK_MESSAGE(run_experiment(cfg) == 0, expr);
    }
}

TEST_CASE("distance experiment on metric models") {
    for (const char* id : {"real-vector", "heisenberg-carnot", "lie-exp-log", "sphere"}) {
        ExperimentConfig cfg = base_config(id, "distance", std::string(id) + "_dist.json");
        cfg.tol = 1e-4;
        CHECK_MESSAGE(run_experiment(cfg) == 0, id);
        const auto j = nlohmann::json::parse(slurp(cfg.out));
        CHECK(j["values"][0].size() == 1);
    }
}

TEST_CASE("convergence experiment on the complex model") {
    ExperimentConfig cfg = base_config("complex-vector", "convergence", "cconv.json");
    cfg.tol = 1e-5;
    CHECK(run_experiment(cfg) == 0);
    const auto j = nlohmann::json::parse(slurp(cfg.out));
    // complex net entries serialize as [re, im]
    CHECK(j["net"][0].is_array());
    CHECK(j["net"][0].size() == 2);
}

TEST_CASE("experiment listing is alphabetical and stable") {
    const auto a = list_experiments();
    const auto b = list_experiments();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].id == b[i].id);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i].id < a[i + 1].id);
    bool has_blue_red = false;
    for (const auto& e : a) has_blue_red = has_blue_red || e.id == "blue-red";
    CHECK(has_blue_red);
}

TEST_CASE("model params flow from the config into the run") {
    nlohmann::json j = {{"model", "contractible-linear"},
                        {"experiment", "axioms"},
                        {"params", {{"matrix", {{0.5, 0.0}, {0.0, 0.5}}}}}};
    ExperimentConfig cfg = config_from_json(j);
    cfg.out = (scratch_dir() / "params.json").string();
    // a dyadic diagonal map keeps the whole integer net exact in doubles
    CHECK(run_experiment(cfg) == 0);
    const auto report = nlohmann::json::parse(slurp(cfg.out));
    CHECK(report["config"]["params"]["matrix"][0][0].get<double>() == 0.5);
}

TEST_CASE("config json round trip rejects unknown fields") {
    nlohmann::json good = {{"model", "real-vector"}, {"experiment", "axioms"}, {"seed", 7}};
    const auto cfg = config_from_json(good);
    CHECK(cfg.model == "real-vector");
    CHECK(cfg.seed == 7);

    nlohmann::json bad = {{"model", "real-vector"}, {"exxperiment", "axioms"}};
    CHECK_THROWS_AS(config_from_json(bad), ConfigError);
}

TEST_CASE("report numbers carry 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.5) == "0.5");
    CHECK(json_to_text(nlohmann::json{{"a", 0.1}}) == "{\"a\":0.10000000000000001}");
}

TEST_CASE("default output path honors the output-directory variable") {
    ExperimentConfig cfg;
    cfg.model = "real-vector";
    cfg.experiment = "axioms";
    setenv("EA_OUTPUT_DIR", "/tmp/ea_outdir", 1);
    CHECK(default_output_path(cfg) == "/tmp/ea_outdir/real-vector_axioms.json");
    unsetenv("EA_OUTPUT_DIR");
    CHECK(default_output_path(cfg) == "./real-vector_axioms.json");
}

TEST_CASE("unwritable output path is a configuration error") {
    ExperimentConfig cfg = base_config("real-vector", "axioms", "x.json");
    cfg.out = "/proc/ea_no_such_place/report.json";
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}

TEST_CASE("degenerate nets are rejected before running") {
    ExperimentConfig cfg = base_config("real-vector", "convergence", "x.json");
    cfg.steps = 1;
    CHECK_THROWS_WITH_AS(run_experiment(cfg), doctest::Contains("steps"), ConfigError);

    cfg.steps = 5;
    cfg.eps_ratio = 2.0;  // moves away from the absolute
    CHECK_THROWS_AS(run_experiment(cfg), DomainError);
}
