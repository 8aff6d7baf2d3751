#include "cmrep/network/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cmrep/error.hpp"

namespace cmrep::network {

namespace {

void require_unit_interval(const char* field, double v) {
    if (!(v >= 0.0 && v <= 1.0)) throw RangeError(std::string("scenario: ") + field + " must lie in [0, 1]");
}

constexpr double kCmPerKm = 1e5;

ScenarioParams chip(std::string name, double p_bsa, unsigned m_mux) {
    // 0.20 dB/cm over 1 cm
    return {std::move(name), 0.20 * kCmPerKm, 1.0 / kCmPerKm, 0.62, std::nullopt, 0.98, 0.98, 0.95, p_bsa, m_mux};
}

ScenarioParams metro(std::string name, double alpha, double conv, double extra, double det, double p_bsa,
                     unsigned m_mux) {
    return {std::move(name), alpha, 10.0, 0.62, conv, extra, det, 0.95, p_bsa, m_mux};
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

void ScenarioParams::validate() const {
    if (!(alpha_db_per_km >= 0.0) || !std::isfinite(alpha_db_per_km)) throw RangeError("scenario: alpha must be >= 0");
    if (!(span_km > 0.0) || !std::isfinite(span_km)) throw RangeError("scenario: span must be > 0");
    require_unit_interval("eta_read", eta_read);
    if (eta_conv) require_unit_interval("eta_conv", *eta_conv);
    require_unit_interval("eta_extra", eta_extra);
    require_unit_interval("eta_det", eta_det);
    require_unit_interval("eta_col", eta_col);
    require_unit_interval("p_bsa", p_bsa);
    if (m_mux < 1) throw RangeError("scenario: m_mux must be >= 1");
}

const std::vector<ScenarioParams>& builtin_scenarios() {
    static const std::vector<ScenarioParams> table{
        chip("chip-a", 0.50, 1),
        chip("chip-b", 0.50, 8),
        chip("chip-c", 0.75, 30),
        metro("metro-a", 0.35, 0.005, 0.90, 0.80, 0.50, 1),
        metro("metro-b", 0.20, 0.50, 0.95, 0.98, 0.50, 8),
        metro("metro-c", 0.16, 0.80, 0.95, 0.98, 0.75, 30),
    };
    return table;
}

std::string builtin_scenario_names() {
    std::string out;
    for (const auto& s : builtin_scenarios()) {
        if (!out.empty()) out += ", ";
        out += s.name;
    }
    return out;
}

const ScenarioParams& find_scenario(std::string_view name) {
    const std::string key = lower(name);
    for (const auto& s : builtin_scenarios())
        if (s.name == key) return s;
    throw ConfigError("unknown scenario '" + std::string(name) + "'; valid names: " + builtin_scenario_names());
}

void NoiseModel::validate() const {
    require_unit_interval("p_link", p_link);
    require_unit_interval("q_swap", q_swap);
}

}  // namespace cmrep::network
