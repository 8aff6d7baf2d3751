#include "cmrep/dynamics/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cmrep/error.hpp"
#include "cmrep/qcore/eig.hpp"
#include "cmrep/qcore/metrics.hpp"

namespace cmrep::dynamics {

using qcore::Complex;

namespace {

constexpr double kTraceDriftLimit = 1e-6;
constexpr double kPhasePerStep = 0.005;

void require_dims(std::size_t n, const ComplexMatrix& m, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw ShapeError(std::string("lindblad: ") + what + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace

LindbladGenerator::LindbladGenerator(const ComplexMatrix& hamiltonian,
                                     const std::vector<CollapseOperator>& collapses) {
    const std::size_t n = hamiltonian.rows();
    require_dims(n, hamiltonian, "Hamiltonian");
    drift_ = Complex(0.0, -1.0) * hamiltonian;
    for (const auto& l : collapses) {
        require_dims(n, l.op, "collapse operator");
        if (l.op.max_abs() == 0.0) continue;
        const ComplexMatrix ldag = l.op.adjoint();
        drift_ -= 0.5 * (ldag * l.op);
        jumps_.push_back(l.op);
        jumps_adjoint_.push_back(ldag);
    }
    drift_adjoint_ = drift_.adjoint();
}

ComplexMatrix LindbladGenerator::operator()(const ComplexMatrix& rho) const {
    require_dims(dim(), rho, "state");
    ComplexMatrix out = drift_ * rho + rho * drift_adjoint_;
    for (std::size_t k = 0; k < jumps_.size(); ++k) out += jumps_[k] * rho * jumps_adjoint_[k];
    return out;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& hamiltonian,
                           const std::vector<CollapseOperator>& collapses) {
    const std::size_t n = rho.rows();
    require_dims(n, hamiltonian, "Hamiltonian");
    ComplexMatrix out = Complex(0.0, -1.0) * qcore::commutator(hamiltonian, rho);
    for (const auto& l : collapses) {
        require_dims(n, l.op, "collapse operator");
        const ComplexMatrix ldag = l.op.adjoint();
        out += l.op * rho * ldag;
        out -= 0.5 * qcore::anticommutator(ldag * l.op, rho);
    }
    return out;
}

ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const ComplexMatrix& hamiltonian,
                           const std::vector<CollapseOperator>& collapses) {
    return lindblad_rhs(rho.matrix(), hamiltonian, collapses);
}

double default_time_step(const LindbladParams& p, HamiltonianModel model) {
    const auto values = qcore::hermitian_eigenvalues(frame_hamiltonian(p, model));
    double scale = std::max(std::abs(values.front()), std::abs(values.back()));
    scale = std::max(scale, p.kappa_d + p.gamma_d + p.kappa_phi + p.gamma_phi);
    if (!(scale > 0.0)) throw RangeError("default_time_step: generator has no time scale");
    return kPhasePerStep / scale;
}

EvolutionTrace evolve(const DensityMatrix& rho0, const LindbladParams& p, double t_final, double dt,
                      std::size_t record_every, EvolveOptions options) {
    if (!(dt > 0.0)) throw RangeError("evolve: dt must be positive");
    if (!(t_final >= dt)) throw RangeError("evolve: t_final must be at least dt");
    if (record_every == 0) throw RangeError("evolve: record_every must be >= 1");
    const auto space = node_space(p);
    if (!(rho0.space() == space)) throw ShapeError("evolve: initial state is not on the node space");

    const LindbladGenerator rhs(frame_hamiltonian(p, options.model), collapse_operators(p));
    const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
    const double h = t_final / static_cast<double>(steps);
    const bool qubit_modes = p.dim_c == 2 && p.dim_m == 2;

    EvolutionTrace trace{{}, {}, {}, {}, rho0};
    auto record = [&](double t, const ComplexMatrix& rho) {
        try {
            DensityMatrix state(space, rho);
            trace.times.push_back(t);
            trace.concurrences.push_back(qubit_modes ? std::optional(qcore::concurrence(state)) : std::nullopt);
            trace.populations.push_back(state.populations());
            trace.states.push_back(state);
            trace.final_state = std::move(state);
        } catch (const ValidationError& e) {
            throw IntegrationError("evolve: state left the density-matrix manifold at t = " + std::to_string(t) +
                                   " s: " + e.what());
        }
    };

    ComplexMatrix rho = rho0.matrix();
    record(0.0, rho);
    const Complex half_h(0.5 * h);
    const Complex sixth_h(h / 6.0);
    for (std::size_t step = 1; step <= steps; ++step) {
        const ComplexMatrix k1 = rhs(rho);
        const ComplexMatrix k2 = rhs(rho + half_h * k1);
        const ComplexMatrix k3 = rhs(rho + half_h * k2);
        const ComplexMatrix k4 = rhs(rho + Complex(h) * k3);
        rho += sixth_h * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double t = static_cast<double>(step) * h;
        const double drift = std::abs(rho.trace() - Complex(1.0));
        if (drift > kTraceDriftLimit)
            throw IntegrationError("evolve: trace drift " + std::to_string(drift) + " at t = " + std::to_string(t) +
                                   " s");
        if (step % record_every == 0 || step == steps) record(t, rho);
    }
    return trace;
}

std::vector<Complex> bell_pair_target(const LindbladParams& p) {
    const auto space = node_space(p);
    std::vector<Complex> ket(space.total_dim());
    const double h = 1.0 / std::sqrt(2.0);
    ket[space.flat_index({0, 1})] = h;
    ket[space.flat_index({1, 0})] = Complex(0.0, -h);
    return ket;
}

double bell_pair_time(const LindbladParams& p) {
    if (!(p.g_mc > 0.0)) throw RangeError("bell_pair_time: g_mc must be positive");
    return std::numbers::pi / (4.0 * p.g_mc);
}

BellPair generate_bell_pair(const LindbladParams& p, EvolveOptions options) {
    const double t = bell_pair_time(p);
    const auto rho0 = DensityMatrix::basis(node_space(p), {0, 1});
    const double dt = std::min(default_time_step(p, options.model), t);
    auto trace = evolve(rho0, p, t, dt, std::numeric_limits<std::size_t>::max(), options);
    const double f = qcore::overlap_fidelity(trace.final_state, bell_pair_target(p));
    return {std::move(trace.final_state), f};
}

EvolutionTrace pair_generation_trace(const LindbladParams& p, std::size_t samples, EvolveOptions options,
                                     std::optional<double> window) {
    if (samples == 0) throw RangeError("pair_generation_trace: samples must be >= 1");
    const double t_final = window.value_or(3.0 * bell_pair_time(p));
    if (!(t_final > 0.0)) throw RangeError("pair_generation_trace: window must be positive");
    const auto rho0 = DensityMatrix::basis(node_space(p), {0, 1});
    // Align recording with the step grid so samples are evenly spaced.
    const double dt_max = default_time_step(p, options.model);
    const auto per_sample = static_cast<std::size_t>(std::ceil(t_final / static_cast<double>(samples) / dt_max));
    const double dt = t_final / static_cast<double>(samples * per_sample);
    return evolve(rho0, p, t_final, dt, per_sample, options);
}

}  // namespace cmrep::dynamics
