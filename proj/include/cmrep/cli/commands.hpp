#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cmrep/cli/config.hpp"

namespace cmrep::cli {

struct OutputFile {
    std::string name;
    std::string content;
};

/// Runs the pair-generation simulation and renders pair_trace.csv,
/// pair_dm.csv and, with svg, pair_trace.svg and pair_dm.svg.
std::vector<OutputFile> cmd_pair(const RunConfig& cfg);

/// Two-stage entanglement swap over four generated node pairs with
/// outcomes drawn from the seeded generator: swap.csv, swap_dm.csv.
std::vector<OutputFile> cmd_swap(const RunConfig& cfg);

/// chain.csv and chain.svg.
std::vector<OutputFile> cmd_chain(const RunConfig& cfg);

/// sweep_<axis>.csv and sweep_<axis>.svg.
std::vector<OutputFile> cmd_sweep(const RunConfig& cfg);

/// Validates `cfg` and dispatches on its command. Nothing is written.
std::vector<OutputFile> render(const RunConfig& cfg);

/// Creates `dir` if needed and writes every file; IoError naming the path.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files);

/// render followed by write_outputs into cfg.output_dir.
std::vector<std::filesystem::path> run(const RunConfig& cfg);

}  // namespace cmrep::cli
