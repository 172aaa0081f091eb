#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ea/errors.hpp"
#include "ea/experiments.hpp"
#include "ea/models.hpp"

namespace {

ea::ExperimentConfig load_base_config(const std::string& config_path) {
    if (config_path.empty()) return {};
    std::ifstream is(config_path);
    if (!is) throw ea::ConfigError("config: cannot open '" + config_path + "'");
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ea::ConfigError("config: invalid JSON in '" + config_path + "': " + e.what());
    }
    return ea::config_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"emergent-algebra experiment runner"};

    std::string config_path;
    std::optional<std::string> model, experiment, expr, map, out, format, params_text;
    std::optional<double> eps_start, eps_ratio, tol, sample_radius;
    std::optional<int> steps, sample_size;
    std::optional<std::uint64_t> seed;
    bool do_list_models = false;
    bool do_list_experiments = false;

    app.add_option("--config", config_path, "JSON config file; flags override its fields");
    app.add_option("--model", model, "model identifier (see --list-models)");
    app.add_option("--experiment", experiment, "experiment identifier (see --list-experiments)");
    app.add_option("--params", params_text, "model parameter block as inline JSON");
    app.add_option("--eps-start", eps_start, "net start (magnitude for complex scales)");
    app.add_option("--eps-ratio", eps_ratio, "net ratio (additive step for integer scales)");
    app.add_option("--steps", steps, "net length (default 20)");
    app.add_option("--sample-size", sample_size, "seeded sample size (default 100)");
    app.add_option("--seed", seed, "sample seed (default 42)");
    app.add_option("--tol", tol, "pass/fail tolerance (default 1e-9)");
    app.add_option("--sample-radius", sample_radius, "sampling radius in the locality ball");
    app.add_option("--expr", expr, "convergence expression: sum | diff | inv | dif-target");
    app.add_option("--map", map, "differential experiment map (identity | quadratic | trig-exp)");
    app.add_option("--out", out, "report path (default $EA_OUTPUT_DIR/<model>_<experiment>.<format>)");
    app.add_option("--format", format, "report format: csv | json");
    app.add_flag("--list-models", do_list_models, "list the implemented models and exit");
    app.add_flag("--list-experiments", do_list_experiments, "list the experiments and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (do_list_models) {
        for (const auto& info : ea::list_models())
            std::cout << info.id << " - " << info.summary << "\n";
        return 0;
    }
    if (do_list_experiments) {
        for (const auto& info : ea::list_experiments())
            std::cout << info.id << " - " << info.summary << "\n";
        return 0;
    }

    try {
        ea::ExperimentConfig cfg = load_base_config(config_path);
        if (model) cfg.model = *model;
        if (experiment) cfg.experiment = *experiment;
        if (params_text) cfg.model_params = nlohmann::json::parse(*params_text);
        if (eps_start) cfg.eps_start = *eps_start;
        if (eps_ratio) cfg.eps_ratio = *eps_ratio;
        if (steps) cfg.steps = *steps;
        if (sample_size) cfg.sample_size = *sample_size;
        if (seed) cfg.seed = *seed;
        if (tol) cfg.tol = *tol;
        if (sample_radius) cfg.sample_radius = *sample_radius;
        if (expr) cfg.expr = *expr;
        if (map) cfg.map = *map;
        if (out) cfg.out = *out;
        if (format) cfg.format = *format;
        if (cfg.experiment.empty()) throw ea::ConfigError("experiment: missing");

        const int status = ea::run_experiment(cfg);
        if (status != 0)
            std::cerr << cfg.model << "/" << cfg.experiment << ": check failed (tol " << cfg.tol
                      << ")\n";
        return status;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: params: " << e.what() << "\n";
        return 1;
    } catch (const ea::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
