#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ea/point.hpp"
#include "ea/scale.hpp"

#include "json.hpp"

namespace ea {

/// %.17g; every double in a report goes through this.
std::string format_double(double v);

/// Stable JSON text: alphabetical keys, numbers with 17 significant digits.
std::string json_to_text(const nlohmann::json& j);

/// Write via a temporary file in the same directory, then rename, so that failed runs
/// never leave a partial report behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// JSON image of a scale element: number (positive real), integer (integer shift),
/// [re, im] (complex).
nlohmann::json scale_to_json(const ScaleElement& e);

/// CSV epsilon column: value, integer, or modulus for complex scales.
std::string scale_to_csv(const ScaleElement& e);

/// The per-scale table every experiment emits: one representative value vector and one
/// residual per net point, plus the extrapolated limit and rate when defined.
struct TableReport {
    nlohmann::json config;
    std::vector<ScaleElement> net;
    std::vector<Point> values;
    std::vector<double> residuals;
    std::optional<Point> extrapolated;
    std::optional<double> rate;
    nlohmann::json pass;  // bool, or an object of per-law booleans
    std::string caveat;
};

/// Columns exactly: epsilon, component_0..component_{d-1}, residual.
std::string to_csv(const TableReport& report);

/// Object with keys config, net, values, extrapolated, rate, pass (and caveat).
std::string to_json_text(const TableReport& report);

}  // namespace ea
