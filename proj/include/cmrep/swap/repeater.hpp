#pragma once

#include <array>

#include "cmrep/swap/bell.hpp"

namespace cmrep::swap {

/// BSM results fed to the two-stage procedure: the two first-stage
/// cavity-pair measurements and the final one at the repeater node.
struct RepeaterOutcomes {
    BellKind left = BellKind::psi_minus;
    BellKind right = BellKind::psi_minus;
    BellKind middle = BellKind::psi_minus;
};

struct RepeaterRun {
    SwapResult left;    ///< (c1, c2) measured, leaves (m1, m2)
    SwapResult right;   ///< (c3, c4) measured, leaves (m3, m4)
    SwapResult middle;  ///< (c2, c3) measured after the node SWAP, leaves (m1, m4)
    /// Joint probability of the three outcomes.
    double probability = 0.0;

    const DensityMatrix& end_to_end() const { return middle.post_state; }
};

/**
 * Four cavity-magnon nodes, each holding a two-qubit state ordered
 * (cavity, magnon), are linked into one end-to-end magnon pair:
 *
 *  1. BSM on (c1, c2) and (c3, c4) entangles (m1, m2) and (m3, m4);
 *  2. fresh vacuum cavities c2, c3 receive m2, m3 through the node SWAP;
 *  3. BSM on (c2, c3) entangles (m1, m4).
 *
 * Every BSM is followed by its feed-forward correction and by a
 * depolarizing channel with retention `q_swap`.
 */
RepeaterRun two_stage_swap(const std::array<DensityMatrix, 4>& nodes, RepeaterOutcomes outcomes, double q_swap = 1.0);

struct SampledRepeaterRun {
    RepeaterRun run;
    Rng rng;
};

SampledRepeaterRun two_stage_swap_sampled(const std::array<DensityMatrix, 4>& nodes, Rng rng, double q_swap = 1.0);

}  // namespace cmrep::swap
