#include "cmrep/swap/bell.hpp"

#include <algorithm>
#include <cmath>

#include "cmrep/error.hpp"

namespace cmrep::swap {

using qcore::Complex;
using qcore::HilbertSpec;

namespace {

constexpr double kZeroProbability = 1e-12;

std::array<BellOutcome, 4> make_table() {
    using namespace qcore::ops;
    const auto id = ComplexMatrix::identity(2);
    auto row = [](BellKind k, ComplexMatrix corr) {
        return BellOutcome{k, qcore::bell_index(k), ComplexMatrix::projector(qcore::bell_ket(k)), std::move(corr)};
    };
    return {row(BellKind::psi_plus, pauli_z()), row(BellKind::psi_minus, id),
            row(BellKind::phi_plus, pauli_z() * pauli_x()), row(BellKind::phi_minus, pauli_x())};
}

std::vector<std::string> spectators(const HilbertSpec& space, const std::string& a, const std::string& b) {
    if (space.size() != 4) throw ShapeError("bsm: state must hold exactly four qubits");
    for (const auto& s : space.subsystems())
        if (s.dim != 2) throw ShapeError("bsm: subsystem '" + s.label + "' is not a qubit");
    if (a == b) throw LabelError("bsm: measured qubits must differ");
    (void)space.index_of(a);
    (void)space.index_of(b);
    std::vector<std::string> rest;
    for (const auto& s : space.subsystems())
        if (s.label != a && s.label != b) rest.push_back(s.label);
    return rest;
}

}  // namespace

const std::array<BellOutcome, 4>& bell_outcomes() {
    static const std::array<BellOutcome, 4> table = make_table();
    return table;
}

const BellOutcome& bell_outcome(BellKind kind) { return bell_outcomes()[static_cast<std::size_t>(qcore::bell_index(kind))]; }

std::array<double, 4> bsm_probabilities(const DensityMatrix& rho, const std::string& qubit_a,
                                        const std::string& qubit_b) {
    (void)spectators(rho.space(), qubit_a, qubit_b);
    std::array<double, 4> probs{};
    for (const auto& o : bell_outcomes()) {
        const ComplexMatrix proj = qcore::embed(o.projector, rho.space(), {qubit_a, qubit_b});
        probs[static_cast<std::size_t>(o.index)] = std::max(0.0, (proj * rho.matrix()).trace().real());
    }
    return probs;
}

SwapResult bsm(const DensityMatrix& rho, const std::string& qubit_a, const std::string& qubit_b, BellKind outcome) {
    const auto rest = spectators(rho.space(), qubit_a, qubit_b);
    const BellOutcome& o = bell_outcome(outcome);

    const ComplexMatrix proj = qcore::embed(o.projector, rho.space(), {qubit_a, qubit_b});
    const ComplexMatrix projected = proj * rho.matrix() * proj;
    const double prob = projected.trace().real();
    if (prob < kZeroProbability)
        throw ZeroProbabilityError("bsm: outcome " + std::string(qcore::bell_name(outcome)) + " has probability " +
                                   std::to_string(prob));

    const DensityMatrix conditioned(rho.space(), (1.0 / prob) * projected);
    const auto reduced = qcore::partial_trace(conditioned, rest);
    const ComplexMatrix u = qcore::embed(o.correction, reduced.space(), {rest[1]});
    DensityMatrix corrected(reduced.space(), u * reduced.matrix() * u.adjoint());
    return {o, prob, std::move(corrected)};
}

SampledSwap bsm_sampled(const DensityMatrix& rho, const std::string& qubit_a, const std::string& qubit_b, Rng rng) {
    const auto probs = bsm_probabilities(rho, qubit_a, qubit_b);
    double total = 0.0;
    for (double p : probs) total += p;
    const double draw = std::uniform_real_distribution<double>(0.0, total)(rng);

    std::size_t chosen = 4;
    double acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (probs[j] < kZeroProbability) continue;
        chosen = j;
        acc += probs[j];
        if (draw < acc) break;
    }
    if (chosen == 4) throw ZeroProbabilityError("bsm_sampled: every outcome has zero probability");
    return {bsm(rho, qubit_a, qubit_b, qcore::bell_kind_from_index(static_cast<int>(chosen))), rng};
}

DensityMatrix node_swap_gate(const DensityMatrix& rho, const std::string& from, const std::string& to) {
    const auto& space = rho.space();
    const std::size_t d = space.dim_of(from);
    if (space.dim_of(to) != d) throw ShapeError("node_swap_gate: subsystems '" + from + "' and '" + to + "' differ in dimension");
    if (from == to) return rho;
    ComplexMatrix swap_op(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) swap_op(j * d + i, i * d + j) = 1.0;
    const ComplexMatrix u = qcore::embed(swap_op, space, {from, to});
    return {space, u * rho.matrix() * u.adjoint()};
}

DensityMatrix depolarize(const DensityMatrix& rho, double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw RangeError("depolarize: retention must lie in [0, 1]");
    if (rho.dim() != 4) throw ShapeError("depolarize: two-qubit state required");
    return {rho.space(), q * rho.matrix() + ((1.0 - q) / 4.0) * ComplexMatrix::identity(4)};
}

double heralded_link_probability(double length, double attenuation_length) {
    if (!(length >= 0.0)) throw RangeError("heralded_link_probability: length must be >= 0");
    if (!(attenuation_length > 0.0)) throw RangeError("heralded_link_probability: attenuation length must be > 0");
    return std::exp(-length / attenuation_length) / 2.0;
}

}  // namespace cmrep::swap
