#include "cmrep/dynamics/scan.hpp"

#include <exception>

#include "cmrep/error.hpp"
#include "cmrep/qcore/metrics.hpp"

namespace cmrep::dynamics {

PairScanPoint scan_point(const LindbladParams& p, std::size_t samples, EvolveOptions options) {
    if (p.dim_c != 2 || p.dim_m != 2) throw ShapeError("pair scan: concurrence needs qubit truncation");
    const auto trace = pair_generation_trace(p, samples, options);
    PairScanPoint out;
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        const double c = trace.concurrences[k].value_or(0.0);
        if (c > out.peak_concurrence) {
            out.peak_concurrence = c;
            out.time_of_peak = trace.times[k];
        }
    }
    out.fidelity = generate_bell_pair(p, options).fidelity;
    return out;
}

std::vector<PairScanPoint> pair_scan_serial(std::span<const LindbladParams> nodes, std::size_t samples,
                                            EvolveOptions options) {
    std::vector<PairScanPoint> out;
    out.reserve(nodes.size());
    for (const auto& p : nodes) out.push_back(scan_point(p, samples, options));
    return out;
}

std::vector<PairScanPoint> pair_scan_parallel(std::span<const LindbladParams> nodes, std::size_t samples,
                                              EvolveOptions options) {
    const auto n = static_cast<std::ptrdiff_t>(nodes.size());
    std::vector<PairScanPoint> out(nodes.size());
    std::vector<std::exception_ptr> errors(nodes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = scan_point(nodes[k], samples, options);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace cmrep::dynamics
