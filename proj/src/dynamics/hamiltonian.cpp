#include "cmrep/dynamics/hamiltonian.hpp"

#include <cmath>

namespace cmrep::dynamics {

using qcore::Complex;

qcore::HilbertSpec node_space(const LindbladParams& p) {
    p.validate();
    return qcore::HilbertSpec({{kMagnon, p.dim_m}, {kCavity, p.dim_c}});
}

ModeOperators mode_operators(const LindbladParams& p) {
    const auto space = node_space(p);
    return {qcore::embed(qcore::ops::annihilation(p.dim_c), space, {kCavity}),
            qcore::embed(qcore::ops::annihilation(p.dim_m), space, {kMagnon}),
            qcore::embed(qcore::ops::number(p.dim_c), space, {kCavity}),
            qcore::embed(qcore::ops::number(p.dim_m), space, {kMagnon})};
}

ComplexMatrix build_full_hamiltonian(const LindbladParams& p) {
    const auto ops = mode_operators(p);
    const ComplexMatrix x_m = ops.m + ops.m.adjoint();
    const ComplexMatrix x_c = ops.c + ops.c.adjoint();
    return Complex(p.omega_c) * ops.n_c + Complex(p.omega_m) * ops.n_m + Complex(p.g_mc) * (x_m * x_c);
}

ComplexMatrix build_rwa_hamiltonian(const LindbladParams& p) {
    const auto ops = mode_operators(p);
    return Complex(p.g_mc) * (ops.m.adjoint() * ops.c + ops.c.adjoint() * ops.m);
}

ComplexMatrix excitation_number(const LindbladParams& p) {
    const auto ops = mode_operators(p);
    return ops.n_c + ops.n_m;
}

std::vector<CollapseOperator> collapse_operators(const LindbladParams& p) {
    const auto ops = mode_operators(p);
    return {
        {"cavity_decay", Complex(std::sqrt(p.kappa_d)) * ops.c, p.kappa_d},
        {"magnon_decay", Complex(std::sqrt(p.gamma_d)) * ops.m, p.gamma_d},
        {"cavity_dephasing", Complex(std::sqrt(p.kappa_phi)) * ops.n_c, p.kappa_phi},
        {"magnon_dephasing", Complex(std::sqrt(p.gamma_phi)) * ops.n_m, p.gamma_phi},
    };
}

ComplexMatrix frame_hamiltonian(const LindbladParams& p, HamiltonianModel model) {
    if (model == HamiltonianModel::full) return build_full_hamiltonian(p);
    const auto ops = mode_operators(p);
    return build_rwa_hamiltonian(p) + Complex(p.omega_m - p.omega_c) * ops.n_m;
}

}  // namespace cmrep::dynamics
