#pragma once

#include <string>
#include <vector>

#include "cmrep/dynamics/lindblad.hpp"
#include "cmrep/network/chain.hpp"
#include "cmrep/network/sweep.hpp"

namespace cmrep::cli {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    /// Fixed y range; fitted to the data when lo >= hi.
    double y_lo = 0.0;
    double y_hi = 0.0;
};

/// Standalone SVG document with axes, ticks, labels and a legend.
std::string render_line_plot(const LinePlot& plot);

/// Grid of |rho_ij| with basis labels on both axes.
std::string render_density_heatmap(const qcore::DensityMatrix& rho, const std::string& title);

std::string pair_trace_svg(const dynamics::EvolutionTrace& trace);

/// Fidelity (solid), usability threshold (dashed) and cumulative success (dashed).
std::string chain_svg(const network::ChainReport& report, double f_min);

/// Cumulative success after the last hop against the swept value.
std::string sweep_svg(network::SweepAxis axis, const std::vector<network::SweepRow>& rows);

}  // namespace cmrep::cli
