#include "cmrep/swap/repeater.hpp"

#include <string>

#include "cmrep/error.hpp"

namespace cmrep::swap {

namespace {

DensityMatrix node_state(const DensityMatrix& pair, int n) {
    if (pair.dim() != 4 || pair.space().size() != 2) throw ShapeError("two_stage_swap: node states must be two-qubit");
    return pair.relabeled({"c" + std::to_string(n), "m" + std::to_string(n)});
}

DensityMatrix repeater_input(const DensityMatrix& left, const DensityMatrix& right) {
    const auto vacuum = DensityMatrix::basis(qcore::HilbertSpec::qubits({"c2", "c3"}), {0, 0});
    auto joint = qcore::tensor(qcore::tensor(left, right), vacuum);
    joint = node_swap_gate(joint, "m2", "c2");
    joint = node_swap_gate(joint, "m3", "c3");
    return qcore::partial_trace(joint, {"m1", "c2", "c3", "m4"});
}

SwapResult with_noise(SwapResult r, double q_swap) {
    r.post_state = depolarize(r.post_state, q_swap);
    return r;
}

}  // namespace

RepeaterRun two_stage_swap(const std::array<DensityMatrix, 4>& nodes, RepeaterOutcomes outcomes, double q_swap) {
    if (!(q_swap >= 0.0 && q_swap <= 1.0)) throw RangeError("two_stage_swap: q_swap must lie in [0, 1]");
    auto left = with_noise(bsm(qcore::tensor(node_state(nodes[0], 1), node_state(nodes[1], 2)), "c1", "c2", outcomes.left), q_swap);
    auto right = with_noise(bsm(qcore::tensor(node_state(nodes[2], 3), node_state(nodes[3], 4)), "c3", "c4", outcomes.right), q_swap);
    auto middle = with_noise(bsm(repeater_input(left.post_state, right.post_state), "c2", "c3", outcomes.middle), q_swap);
    const double prob = left.probability * right.probability * middle.probability;
    return {std::move(left), std::move(right), std::move(middle), prob};
}

SampledRepeaterRun two_stage_swap_sampled(const std::array<DensityMatrix, 4>& nodes, Rng rng, double q_swap) {
    if (!(q_swap >= 0.0 && q_swap <= 1.0)) throw RangeError("two_stage_swap: q_swap must lie in [0, 1]");
    auto l = bsm_sampled(qcore::tensor(node_state(nodes[0], 1), node_state(nodes[1], 2)), "c1", "c2", std::move(rng));
    auto r = bsm_sampled(qcore::tensor(node_state(nodes[2], 3), node_state(nodes[3], 4)), "c3", "c4", std::move(l.rng));
    auto left = with_noise(std::move(l.result), q_swap);
    auto right = with_noise(std::move(r.result), q_swap);
    auto m = bsm_sampled(repeater_input(left.post_state, right.post_state), "c2", "c3", std::move(r.rng));
    auto middle = with_noise(std::move(m.result), q_swap);
    const double prob = left.probability * right.probability * middle.probability;
    return {{std::move(left), std::move(right), std::move(middle), prob}, std::move(m.rng)};
}

}  // namespace cmrep::swap
