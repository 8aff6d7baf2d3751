#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmrep/dynamics/lindblad.hpp"
#include "cmrep/network/scenario.hpp"
#include "cmrep/network/sweep.hpp"

namespace cmrep::cli {

enum class Command { pair, swap, chain, sweep };

Command parse_command(std::string_view name);
std::string_view command_name(Command c);

struct OutputFormats {
    bool csv = true;
    bool svg = false;

    bool empty() const { return !csv && !svg; }
};

/// Comma-separated subset of {csv, svg}.
OutputFormats parse_formats(std::string_view list);

struct RunConfig {
    Command command = Command::chain;
    network::ScenarioParams scenario = network::find_scenario("chip-a");
    std::size_t hops = 4;
    network::NoiseModel noise;
    dynamics::LindbladParams lindblad;
    dynamics::HamiltonianModel model = dynamics::HamiltonianModel::rwa;
    /// Length of the pair trace; 3 pi / (4 g_mc) when absent.
    std::optional<double> t_final;
    std::size_t samples = 300;
    std::uint64_t seed = 1;
    std::filesystem::path output_dir = ".";
    OutputFormats formats;
    std::optional<double> pclick_override;
    bool ideal = false;
    network::SweepAxis sweep_axis = network::SweepAxis::mux;
    std::vector<double> sweep_values;

    /// Lindblad parameters with the --ideal switch applied.
    dynamics::LindbladParams node() const;

    /// Throws ConfigError or RangeError on the first violated invariant.
    void validate() const;
};

/**
 * Parses the line-oriented config format:
 *
 *     # comment
 *     key = value [unit]
 *
 * Physical quantities require a unit suffix; frequencies are given as
 * f = omega / 2 pi. `scenario = NAME` selects a built-in template that the
 * per-field keys (alpha, span, eta_*, p_bsa, m_mux) then override, in any
 * order. Errors carry the origin and line number.
 */
RunConfig parse_config(std::string_view text, std::string_view origin = "<config>");

/// parse_config on a file; a missing or unreadable file is a ConfigError.
RunConfig load_config(const std::filesystem::path& path);

/// Config lines that reproduce `s` exactly when parsed.
std::string serialize_scenario(const network::ScenarioParams& s);

std::vector<double> parse_number_list(std::string_view list);

}  // namespace cmrep::cli
