#pragma once

#include <string_view>
#include <vector>

#include "cmrep/network/chain.hpp"

namespace cmrep::network {

enum class SweepAxis { mux, conv, hops, length };

SweepAxis parse_sweep_axis(std::string_view name);
std::string_view sweep_axis_name(SweepAxis axis);

struct SweepRequest {
    ScenarioParams base;
    SweepAxis axis = SweepAxis::mux;
    std::vector<double> values;
    std::size_t hops = 4;  ///< ignored for SweepAxis::hops, where the value is the hop count
    NoiseModel noise;
    ChainOptions options;
};

struct SweepRow {
    double value = 0.0;
    double p_click = 0.0;
    HopRecord record;
};

/// Scenario with the swept field replaced; throws RangeError naming the
/// axis when `value` is outside its legal domain.
ScenarioParams apply_axis(const ScenarioParams& base, SweepAxis axis, double value);

/// Reference implementation: values in order, hops in order.
std::vector<SweepRow> sweep_serial(const SweepRequest& request);

/// OpenMP over sweep values; output identical to sweep_serial, row for row.
std::vector<SweepRow> sweep_parallel(const SweepRequest& request);

}  // namespace cmrep::network
