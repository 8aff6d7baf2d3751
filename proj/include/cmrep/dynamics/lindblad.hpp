#pragma once

#include <optional>
#include <vector>

#include "cmrep/dynamics/hamiltonian.hpp"
#include "cmrep/qcore/state.hpp"

namespace cmrep::dynamics {

using qcore::DensityMatrix;

/// -i[H, rho] + sum_k (L_k rho L_k^dag - 1/2 {L_k^dag L_k, rho})
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& hamiltonian,
                           const std::vector<CollapseOperator>& collapses);
ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const ComplexMatrix& hamiltonian,
                           const std::vector<CollapseOperator>& collapses);

/// The same generator with the non-Hermitian part folded into
/// K = -iH - 1/2 sum L^dag L, so rhs(rho) = K rho + rho K^dag + sum L rho L^dag.
class LindbladGenerator {
public:
    LindbladGenerator(const ComplexMatrix& hamiltonian, const std::vector<CollapseOperator>& collapses);

    ComplexMatrix operator()(const ComplexMatrix& rho) const;
    std::size_t dim() const { return drift_.rows(); }

private:
    ComplexMatrix drift_;
    ComplexMatrix drift_adjoint_;
    std::vector<ComplexMatrix> jumps_;
    std::vector<ComplexMatrix> jumps_adjoint_;
};

struct EvolutionTrace {
    std::vector<double> times;  ///< seconds, strictly increasing
    /// Absent unless both modes are truncated to qubits.
    std::vector<std::optional<double>> concurrences;
    /// One row per recorded time, one column per product basis state |n_m, n_c>.
    std::vector<std::vector<double>> populations;
    std::vector<DensityMatrix> states;
    DensityMatrix final_state;
};

struct EvolveOptions {
    HamiltonianModel model = HamiltonianModel::rwa;
};

/// Step size putting 0.005 rad of phase per step on the fastest scale of
/// the generator (spectral radius of H or total dissipation).
double default_time_step(const LindbladParams& p, HamiltonianModel model = HamiltonianModel::rwa);

/**
 * Fixed-step classical RK4 integration of the master equation.
 *
 * The step count is ceil(t_final / dt); the step is then shrunk so the last
 * step lands on t_final. States are recorded at t = 0, every
 * `record_every` steps, and at t_final, and each recorded state is
 * re-validated as a density matrix. Trace drift beyond 1e-6 on any step
 * raises IntegrationError; the state is never renormalized.
 */
EvolutionTrace evolve(const DensityMatrix& rho0, const LindbladParams& p, double t_final, double dt,
                      std::size_t record_every, EvolveOptions options = {});

/// (|0_m 1_c> - i |1_m 0_c>)/sqrt(2) on the node space.
std::vector<qcore::Complex> bell_pair_target(const LindbladParams& p);

/// Interaction time pi / (4 g_mc).
double bell_pair_time(const LindbladParams& p);

struct BellPair {
    DensityMatrix state;
    double fidelity = 0.0;
};

/// Evolves |0_m 1_c> for pi / (4 g_mc) under the full dissipative model.
BellPair generate_bell_pair(const LindbladParams& p, EvolveOptions options = {});

/// Concurrence trace of pair generation over [0, window], by default
/// [0, 3 pi / (4 g_mc)], recorded at `samples` evenly spaced steps.
EvolutionTrace pair_generation_trace(const LindbladParams& p, std::size_t samples = 300,
                                     EvolveOptions options = {}, std::optional<double> window = std::nullopt);

}  // namespace cmrep::dynamics
