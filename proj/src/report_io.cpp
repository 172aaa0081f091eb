#include "ea/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ea/errors.hpp"

namespace ea {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_json(std::string& out, const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: out += "null"; break;
        case nlohmann::json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            break;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            break;
        case nlohmann::json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        case nlohmann::json::value_t::string: out += nlohmann::json(j.get<std::string>()).dump(); break;
        case nlohmann::json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                append_json(out, item);
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                append_json(out, it.value());
            }
            out += '}';
            break;
        }
        default: throw DomainError("json_to_text: unsupported value type");
    }
}

}  // namespace

std::string json_to_text(const nlohmann::json& j) {
    std::string out;
    append_json(out, j);
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("out: cannot write to '" + path.string() + "'");
        os << content;
        if (!os.flush()) throw ConfigError("out: write failed for '" + path.string() + "'");
    }
    fs::rename(tmp, path, ec);
    if (ec) throw ConfigError("out: cannot finalize '" + path.string() + "': " + ec.message());
}

nlohmann::json scale_to_json(const ScaleElement& e) {
    switch (e.variant()) {
        case ScaleVariant::positive_real: return e.real();
        case ScaleVariant::integer_shift: return e.integer();
        case ScaleVariant::nonzero_complex: {
            const auto z = e.complex_value();
            return nlohmann::json::array({z.real(), z.imag()});
        }
    }
    return nullptr;
}

std::string scale_to_csv(const ScaleElement& e) {
    switch (e.variant()) {
        case ScaleVariant::positive_real: return format_double(e.real());
        case ScaleVariant::integer_shift: return std::to_string(e.integer());
        case ScaleVariant::nonzero_complex: return format_double(e.magnitude());
    }
    return "";
}

std::string to_csv(const TableReport& report) {
    if (report.values.empty() || report.values.size() != report.net.size() ||
        report.residuals.size() != report.net.size())
        throw DomainError("to_csv: inconsistent table report");
    const Eigen::Index d = report.values.front().size();
    std::ostringstream os;
    os << "epsilon";
    for (Eigen::Index i = 0; i < d; ++i) os << ",component_" << i;
    os << ",residual\n";
    for (std::size_t k = 0; k < report.net.size(); ++k) {
        os << scale_to_csv(report.net[k]);
        for (Eigen::Index i = 0; i < d; ++i) os << ',' << format_double(report.values[k][i]);
        os << ',' << format_double(report.residuals[k]) << '\n';
    }
    return os.str();
}

std::string to_json_text(const TableReport& report) {
    nlohmann::json j;
    j["config"] = report.config;
    j["net"] = nlohmann::json::array();
    for (const ScaleElement& e : report.net) j["net"].push_back(scale_to_json(e));
    j["values"] = nlohmann::json::array();
    for (const Point& v : report.values) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i]);
        j["values"].push_back(row);
    }
    j["residuals"] = report.residuals;
    if (report.extrapolated) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index i = 0; i < report.extrapolated->size(); ++i)
            row.push_back((*report.extrapolated)[i]);
        j["extrapolated"] = row;
    } else {
        j["extrapolated"] = nullptr;
    }
    if (report.rate && std::isfinite(*report.rate))
        j["rate"] = *report.rate;
    else
        j["rate"] = nullptr;
    j["pass"] = report.pass;
    if (!report.caveat.empty()) j["caveat"] = report.caveat;
    return json_to_text(j) + "\n";
}

}  // namespace ea
