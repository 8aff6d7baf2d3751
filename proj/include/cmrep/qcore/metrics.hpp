#pragma once

#include "cmrep/qcore/state.hpp"

namespace cmrep::qcore {

/// Wootters concurrence of a two-qubit state, in [0, 1].
///
/// The spin-flip spectrum is taken from the Hermitian product
/// sqrt(rho) * rho_tilde * sqrt(rho), whose eigenvalues are the squares of
/// the usual lambda_i; no general complex eigensolver is needed.
double concurrence(const DensityMatrix& rho);
double concurrence(const ComplexMatrix& rho);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// <psi|rho|psi> for a normalized ket.
double overlap_fidelity(const DensityMatrix& rho, std::span<const Complex> ket);

}  // namespace cmrep::qcore
