#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmrep::network {

/// One deployment scenario. Attenuation and span are always stored in
/// dB/km and km; chip-scale rows given in dB/cm and cm are normalized on
/// ingestion.
struct ScenarioParams {
    std::string name;
    double alpha_db_per_km = 0.0;
    double span_km = 0.0;
    double eta_read = 1.0;
    /// Absent for purely microwave links (no conversion stage).
    std::optional<double> eta_conv;
    double eta_extra = 1.0;
    double eta_det = 1.0;
    double eta_col = 1.0;
    double p_bsa = 0.5;
    unsigned m_mux = 1;

    /// Throws RangeError naming the offending field.
    void validate() const;

    friend bool operator==(const ScenarioParams&, const ScenarioParams&) = default;
};

/// Chip-A/B/C and Metro-A/B/C.
const std::vector<ScenarioParams>& builtin_scenarios();

/// Case-insensitive lookup among the built-ins; throws ConfigError listing
/// the valid names.
const ScenarioParams& find_scenario(std::string_view name);

std::string builtin_scenario_names();

struct NoiseModel {
    double p_link = 0.94;  ///< Werner purity of each elementary link
    /// Depolarizing retention applied after each swap. Calibrated so the
    /// four-hop fidelity lands on 0.78 with p_link = 0.94.
    double q_swap = 0.967;

    void validate() const;

    friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

}  // namespace cmrep::network
