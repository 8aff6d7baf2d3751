#pragma once

#include <string>
#include <vector>

#include "cmrep/dynamics/params.hpp"
#include "cmrep/qcore/hilbert.hpp"
#include "cmrep/qcore/matrix.hpp"

namespace cmrep::dynamics {

using qcore::ComplexMatrix;

inline const std::string kMagnon = "m";
inline const std::string kCavity = "c";

/// Joint node space, magnon first: |n_m, n_c>.
qcore::HilbertSpec node_space(const LindbladParams& p);

/// Mode operators embedded on the joint space.
struct ModeOperators {
    ComplexMatrix c;  ///< cavity lowering
    ComplexMatrix m;  ///< magnon lowering
    ComplexMatrix n_c;
    ComplexMatrix n_m;
};
ModeOperators mode_operators(const LindbladParams& p);

/// omega_c c^dag c + omega_m m^dag m + g (m + m^dag)(c + c^dag), lab frame.
ComplexMatrix build_full_hamiltonian(const LindbladParams& p);

/// g (m^dag c + c^dag m)
ComplexMatrix build_rwa_hamiltonian(const LindbladParams& p);

/// n_c + n_m
ComplexMatrix excitation_number(const LindbladParams& p);

struct CollapseOperator {
    std::string name;
    ComplexMatrix op;  ///< already scaled by sqrt(rate)
    double rate = 0.0;
};

/// Cavity decay, magnon decay, cavity dephasing, magnon dephasing, in that
/// order.
std::vector<CollapseOperator> collapse_operators(const LindbladParams& p);

enum class HamiltonianModel {
    rwa,   ///< rotating frame at omega_c; exchange coupling plus detuning
    full,  ///< lab frame, counter-rotating terms kept
};

/// Generator actually integrated for the chosen model. At resonance the
/// RWA model is exactly build_rwa_hamiltonian.
ComplexMatrix frame_hamiltonian(const LindbladParams& p, HamiltonianModel model);

}  // namespace cmrep::dynamics
