#include "cmrep/cli/commands.hpp"

#include <array>
#include <system_error>

#include "cmrep/cli/csv.hpp"
#include "cmrep/cli/svg.hpp"
#include "cmrep/error.hpp"
#include "cmrep/swap/bell.hpp"
#include "cmrep/swap/repeater.hpp"

namespace cmrep::cli {

namespace {

// Node pair reordered to (cavity, magnon), the layout the repeater expects.
qcore::DensityMatrix cavity_first(const qcore::DensityMatrix& pair) {
    return swap::node_swap_gate(pair, dynamics::kMagnon, dynamics::kCavity)
        .relabeled({dynamics::kCavity, dynamics::kMagnon});
}

network::ChainOptions chain_options(const RunConfig& cfg) {
    return {cfg.pclick_override, network::kUsableFidelity};
}

}  // namespace

std::vector<OutputFile> cmd_pair(const RunConfig& cfg) {
    const auto node = cfg.node();
    const auto trace = dynamics::pair_generation_trace(node, cfg.samples, {cfg.model}, cfg.t_final);
    const auto pair = dynamics::generate_bell_pair(node, {cfg.model});

    std::vector<OutputFile> out;
    if (cfg.formats.csv) {
        out.push_back({"pair_trace.csv", pair_trace_table(trace).str()});
        out.push_back({"pair_dm.csv", density_table(pair.state).str()});
    }
    if (cfg.formats.svg) {
        out.push_back({"pair_trace.svg", pair_trace_svg(trace)});
        out.push_back({"pair_dm.svg", render_density_heatmap(pair.state, "Node density matrix at t = pi/(4 g)")});
    }
    return out;
}

std::vector<OutputFile> cmd_swap(const RunConfig& cfg) {
    const auto node = cfg.node();
    if (node.dim_c != 2 || node.dim_m != 2) throw ConfigError("swap needs qubit truncation (dim_c = dim_m = 2)");
    const auto pair = cavity_first(dynamics::generate_bell_pair(node, {cfg.model}).state);
    const std::array<qcore::DensityMatrix, 4> nodes{pair, pair, pair, pair};
    const auto sampled = swap::two_stage_swap_sampled(nodes, swap::Rng(cfg.seed), cfg.noise.q_swap);

    std::vector<OutputFile> out;
    if (cfg.formats.csv) {
        out.push_back({"swap.csv", swap_table(sampled.run).str()});
        out.push_back({"swap_dm.csv", density_table(sampled.run.end_to_end()).str()});
    }
    if (cfg.formats.svg)
        out.push_back({"swap_dm.svg", render_density_heatmap(sampled.run.end_to_end(), "End-to-end magnon pair (m1, m4)")});
    return out;
}

std::vector<OutputFile> cmd_chain(const RunConfig& cfg) {
    const auto report = network::simulate_chain(cfg.scenario, cfg.hops, cfg.noise, chain_options(cfg));
    std::vector<OutputFile> out;
    if (cfg.formats.csv) out.push_back({"chain.csv", chain_table(report).str()});
    if (cfg.formats.svg) out.push_back({"chain.svg", chain_svg(report, network::kUsableFidelity)});
    return out;
}

std::vector<OutputFile> cmd_sweep(const RunConfig& cfg) {
    const network::SweepRequest req{cfg.scenario, cfg.sweep_axis, cfg.sweep_values, cfg.hops, cfg.noise,
                                    chain_options(cfg)};
    const auto rows = network::sweep_parallel(req);
    const std::string stem = "sweep_" + std::string(network::sweep_axis_name(cfg.sweep_axis));
    std::vector<OutputFile> out;
    if (cfg.formats.csv) out.push_back({stem + ".csv", sweep_table(cfg.sweep_axis, rows).str()});
    if (cfg.formats.svg) out.push_back({stem + ".svg", sweep_svg(cfg.sweep_axis, rows)});
    return out;
}

std::vector<OutputFile> render(const RunConfig& cfg) {
    cfg.validate();
    switch (cfg.command) {
        case Command::pair: return cmd_pair(cfg);
        case Command::swap: return cmd_swap(cfg);
        case Command::chain: return cmd_chain(cfg);
        case Command::sweep: return cmd_sweep(cfg);
    }
    return {};
}

std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    std::vector<std::filesystem::path> written;
    for (const auto& f : files) {
        written.push_back(dir / f.name);
        write_text_file(written.back(), f.content);
    }
    return written;
}

std::vector<std::filesystem::path> run(const RunConfig& cfg) { return write_outputs(cfg.output_dir, render(cfg)); }

}  // namespace cmrep::cli
