#pragma once

#include <span>
#include <vector>

#include "cmrep/dynamics/lindblad.hpp"

namespace cmrep::dynamics {

/// Summary of one pair-generation run inside a parameter scan.
struct PairScanPoint {
    double fidelity = 0.0;          ///< to the target Bell state at pi/(4 g)
    double peak_concurrence = 0.0;  ///< max over the [0, 3 pi/(4 g)] trace
    double time_of_peak = 0.0;      ///< seconds
};

PairScanPoint scan_point(const LindbladParams& p, std::size_t samples, EvolveOptions options = {});

/// Reference: one node after another.
std::vector<PairScanPoint> pair_scan_serial(std::span<const LindbladParams> nodes, std::size_t samples = 300,
                                            EvolveOptions options = {});

/// Independent evolutions spread over OpenMP threads. Results equal
/// pair_scan_serial exactly; the first failure is rethrown after the loop.
std::vector<PairScanPoint> pair_scan_parallel(std::span<const LindbladParams> nodes, std::size_t samples = 300,
                                              EvolveOptions options = {});

}  // namespace cmrep::dynamics
