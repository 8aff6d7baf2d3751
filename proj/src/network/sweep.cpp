#include "cmrep/network/sweep.hpp"

#include <cmath>
#include <string>

#include "cmrep/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmrep::network {

namespace {

std::string axis_error(SweepAxis axis, double value, const char* domain) {
    return "sweep axis '" + std::string(sweep_axis_name(axis)) + "': value " + std::to_string(value) +
           " outside " + domain;
}

bool is_count(double v) { return std::isfinite(v) && v >= 1.0 && v == std::floor(v) && v < 1e6; }

std::size_t hops_for(const SweepRequest& r, double value) {
    return r.axis == SweepAxis::hops ? static_cast<std::size_t>(value) : r.hops;
}

void validate(const SweepRequest& r) {
    if (r.values.empty()) throw RangeError("sweep: no values given");
    if (r.axis != SweepAxis::hops && r.hops < 1) throw RangeError("sweep: hops must be >= 1");
    for (double v : r.values) (void)apply_axis(r.base, r.axis, v);
    r.noise.validate();
}

/// Rows contributed by one sweep value.
void evaluate(const SweepRequest& r, double value, SweepRow* out) {
    const auto scenario = apply_axis(r.base, r.axis, value);
    const double p_click = r.options.pclick_override ? *r.options.pclick_override : click_probability(scenario);
    const auto report = simulate_chain(scenario, hops_for(r, value), r.noise, r.options);
    for (std::size_t h = 0; h < report.hops.size(); ++h) out[h] = {value, p_click, report.hops[h]};
}

}  // namespace

SweepAxis parse_sweep_axis(std::string_view name) {
    if (name == "mux") return SweepAxis::mux;
    if (name == "conv") return SweepAxis::conv;
    if (name == "hops") return SweepAxis::hops;
    if (name == "length") return SweepAxis::length;
    throw RangeError("unknown sweep axis '" + std::string(name) + "'; expected mux, conv, hops or length");
}

std::string_view sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::mux: return "mux";
        case SweepAxis::conv: return "conv";
        case SweepAxis::hops: return "hops";
        case SweepAxis::length: return "length";
    }
    return "?";
}

ScenarioParams apply_axis(const ScenarioParams& base, SweepAxis axis, double value) {
    ScenarioParams s = base;
    switch (axis) {
        case SweepAxis::mux:
            if (!is_count(value)) throw RangeError(axis_error(axis, value, "the positive integers"));
            s.m_mux = static_cast<unsigned>(value);
            break;
        case SweepAxis::conv:
            if (!(value > 0.0 && value <= 1.0)) throw RangeError(axis_error(axis, value, "(0, 1]"));
            s.eta_conv = value;
            break;
        case SweepAxis::hops:
            if (!is_count(value)) throw RangeError(axis_error(axis, value, "the positive integers"));
            break;
        case SweepAxis::length:
            if (!(value > 0.0) || !std::isfinite(value)) throw RangeError(axis_error(axis, value, "(0, inf) km"));
            s.span_km = value;
            break;
    }
    s.validate();
    return s;
}

std::vector<SweepRow> sweep_serial(const SweepRequest& request) {
    validate(request);
    std::vector<SweepRow> rows;
    for (double v : request.values) {
        std::vector<SweepRow> chunk(hops_for(request, v));
        evaluate(request, v, chunk.data());
        rows.insert(rows.end(), chunk.begin(), chunk.end());
    }
    return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepRequest& request) {
    validate(request);
    const auto n = static_cast<std::ptrdiff_t>(request.values.size());
    std::vector<std::size_t> offset(request.values.size() + 1, 0);
    for (std::size_t i = 0; i < request.values.size(); ++i)
        offset[i + 1] = offset[i] + hops_for(request, request.values[i]);

    std::vector<SweepRow> rows(offset.back());
    // Inputs were validated above, so evaluate() cannot throw inside the region.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        evaluate(request, request.values[k], rows.data() + offset[k]);
    }
    return rows;
}

}  // namespace cmrep::network
