#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ea {

/// A fully resolved experiment run. Every field has a deterministic default, so a run is
/// reproducible from (model, experiment, seed) alone.
struct ExperimentConfig {
    std::string model = "real-vector";
    nlohmann::json model_params = nlohmann::json::object();
    std::string experiment;
    std::optional<double> eps_start;  // net start (magnitude for complex scales)
    std::optional<double> eps_ratio;  // net ratio (additive step for integer scales)
    int steps = 20;
    int sample_size = 100;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    double sample_radius = 0.35;
    std::string expr = "sum";       // convergence experiment expression
    std::string map = "quadratic";  // differential experiment map
    std::string out;                // empty: derived from EA_OUTPUT_DIR (default ".")
    std::string format = "json";
};

/// Reads the fields above from a JSON object; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// The resolved config as embedded in every report.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

struct ExperimentInfo {
    std::string id;
    std::string summary;
};

/// Alphabetical, stable listing of the experiments.
std::vector<ExperimentInfo> list_experiments();

/// Output path used when cfg.out is empty: $EA_OUTPUT_DIR/<model>_<experiment>.<format>.
std::string default_output_path(const ExperimentConfig& cfg);

/// Runs one experiment and writes its report. Returns 0 when all asserted checks pass
/// and 2 on a check failure; configuration and domain errors throw (the CLI maps them to
/// exit 1). Reports are written atomically, including on check failure.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace ea
