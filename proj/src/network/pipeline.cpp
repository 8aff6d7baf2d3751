#include "cmrep/network/pipeline.hpp"

#include "cmrep/error.hpp"
#include "cmrep/qcore/metrics.hpp"
#include "cmrep/swap/bell.hpp"

namespace cmrep::network {

qcore::DensityMatrix exact_chain_state(std::size_t hops, const NoiseModel& nm) {
    nm.validate();
    if (hops < 1) throw RangeError("exact_chain_state: hops must be >= 1");
    auto current = qcore::werner_state(nm.p_link, {"a", "b"});
    for (std::size_t h = 1; h < hops; ++h) {
        const auto joint = qcore::tensor(current, qcore::werner_state(nm.p_link, {"x", "y"}));
        const auto outcome = qcore::bell_kind_from_index(static_cast<int>(h % 4));
        const auto swapped = swap::bsm(joint, "b", "x", outcome).post_state;
        current = swap::depolarize(swapped, nm.q_swap).relabeled({"a", "b"});
    }
    return current;
}

HopFidelity exact_chain_fidelity(std::size_t hops, const NoiseModel& nm) {
    const auto rho = exact_chain_state(hops, nm);
    return {qcore::overlap_fidelity(rho, qcore::bell_ket(qcore::BellKind::psi_minus)), qcore::concurrence(rho)};
}

}  // namespace cmrep::network
