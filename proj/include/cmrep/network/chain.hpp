#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmrep/network/scenario.hpp"

namespace cmrep::network {

inline constexpr double kUsableFidelity = 0.7;

/// Returned by threshold_hops when fidelity never drops below the bound.
inline constexpr std::size_t kUnboundedHops = std::numeric_limits<std::size_t>::max();

/// 10^{-alpha L / 10} * eta_conv^2 * eta_extra; the conversion factor is 1
/// when the scenario has no conversion stage.
double link_efficiency(const ScenarioParams& s);

/// Single-channel Bell click probability,
/// p_bsa * eta_det^2 * eta_col^2 * eta_link^2 * eta_read.
double click_probability(const ScenarioParams& s);

/// 1 - (1 - p_click)^m_mux
double hop_success(double p_click, unsigned m_mux);

/// Running product of per-hop success probabilities.
std::vector<double> cumulative_success(std::span<const double> per_hop);

/// p_link^h * q_swap^(h - 1)
double effective_purity(std::size_t hops, const NoiseModel& nm);

struct HopFidelity {
    double fidelity = 0.0;
    double concurrence = 0.0;
};

/// Fidelity to the singlet and concurrence of the end-to-end Werner pair
/// after `hops` elementary links.
HopFidelity chain_fidelity(std::size_t hops, const NoiseModel& nm);

/// F >= f_min, with 1e-12 slack so values that equal the bound
/// analytically are not rejected by rounding.
bool meets_fidelity(double fidelity, double f_min);

struct HopRecord {
    std::size_t hop = 0;
    double fidelity = 0.0;
    double concurrence = 0.0;
    double p_hop = 0.0;
    double p_cumulative = 0.0;
    bool usable = false;
};

struct ChainReport {
    std::string scenario;
    std::vector<HopRecord> hops;
};

struct ChainOptions {
    /// Replaces the computed single-channel click probability.
    std::optional<double> pclick_override;
    double f_min = kUsableFidelity;
};

ChainReport simulate_chain(const ScenarioParams& s, std::size_t hops, const NoiseModel& nm, ChainOptions options = {});

/// Heterogeneous chain, one scenario per hop.
ChainReport simulate_chain(std::span<const ScenarioParams> hops, const NoiseModel& nm, ChainOptions options = {});

/// Largest h with chain_fidelity(h).fidelity >= f_min; 0 when even one
/// hop fails, kUnboundedHops when fidelity never drops below f_min.
std::size_t threshold_hops(const NoiseModel& nm, double f_min = kUsableFidelity);

}  // namespace cmrep::network
