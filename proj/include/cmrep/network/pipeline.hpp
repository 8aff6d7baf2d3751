#pragma once

#include <cstddef>

#include "cmrep/network/chain.hpp"
#include "cmrep/qcore/state.hpp"

namespace cmrep::network {

/// End-to-end pair after `hops` Werner links joined by h - 1 exact
/// density-matrix swaps, each followed by the swap depolarizing channel.
/// Outcomes cycle through the measurement table so every correction is used.
qcore::DensityMatrix exact_chain_state(std::size_t hops, const NoiseModel& nm);

/// chain_fidelity evaluated on exact_chain_state instead of the closed form.
HopFidelity exact_chain_fidelity(std::size_t hops, const NoiseModel& nm);

}  // namespace cmrep::network
