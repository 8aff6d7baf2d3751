#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "cmrep/qcore/state.hpp"

namespace cmrep::swap {

using qcore::BellKind;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;

/// One row of the Bell-state-measurement table.
struct BellOutcome {
    BellKind label;
    int index;                 ///< j in 0..3
    ComplexMatrix projector;   ///< |Phi_j><Phi_j|
    ComplexMatrix correction;  ///< single-qubit Pauli product fed forward
};

/// psi+ -> sigma_z, psi- -> I, phi+ -> sigma_z sigma_x, phi- -> sigma_x.
const BellOutcome& bell_outcome(BellKind kind);
const std::array<BellOutcome, 4>& bell_outcomes();

struct SwapResult {
    BellOutcome outcome;
    double probability = 0.0;
    DensityMatrix post_state;  ///< remaining two qubits, corrected
};

/// Outcome probabilities tr[(Pi_j x I) rho], indexed by j.
std::array<double, 4> bsm_probabilities(const DensityMatrix& rho, const std::string& qubit_a,
                                        const std::string& qubit_b);

/**
 * Bell-state measurement of qubits (a, b) inside a four-qubit state,
 * conditioned on `outcome`.
 *
 * The remaining two qubits keep their original order; the correction is
 * applied to the second of them (the downstream qubit). Throws
 * ZeroProbabilityError when the outcome has probability below 1e-12.
 */
SwapResult bsm(const DensityMatrix& rho, const std::string& qubit_a, const std::string& qubit_b,
               BellKind outcome);

using Rng = std::mt19937_64;

struct SampledSwap {
    SwapResult result;
    Rng rng;  ///< generator state after the draw
};

/// Draws the outcome from bsm_probabilities. The generator is taken and
/// returned by value so concurrent runs never share state.
SampledSwap bsm_sampled(const DensityMatrix& rho, const std::string& qubit_a, const std::string& qubit_b, Rng rng);

/// Conjugation by the SWAP unitary between two equal-dimension subsystems.
DensityMatrix node_swap_gate(const DensityMatrix& rho, const std::string& from, const std::string& to);

/// q rho + (1 - q) I/4 on a two-qubit state.
DensityMatrix depolarize(const DensityMatrix& rho, double q);

/// e^{-L/d} / 2 for a span L and attenuation length d (same length unit).
double heralded_link_probability(double length, double attenuation_length);

}  // namespace cmrep::swap
