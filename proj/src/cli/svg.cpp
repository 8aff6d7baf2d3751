#include "cmrep/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cmrep/cli/csv.hpp"

namespace cmrep::cli {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 60;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string text(double x, double y, const std::string& s, const char* anchor = "middle", const char* extra = "") {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\" " + extra + ">" +
           escape(s) + "</text>\n";
}

std::pair<double, double> padded(double lo, double hi) {
    if (!(lo < hi)) {
        const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
        return {lo - pad, hi + pad};
    }
    return {lo, hi};
}

std::string header(const std::string& title) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" +
           text(kWidth / 2, 22, title, "middle", "font-size=\"15\"");
}

}  // namespace

std::string render_line_plot(const LinePlot& plot) {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& s : plot.series) {
        for (double x : s.x) x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
        for (double y : s.y) y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
    }
    if (!std::isfinite(x_lo)) x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
    if (plot.y_lo < plot.y_hi) y_lo = plot.y_lo, y_hi = plot.y_hi;
    std::tie(x_lo, x_hi) = padded(x_lo, x_hi);
    std::tie(y_lo, y_hi) = padded(y_lo, y_hi);

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto sy = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

    std::string out = header(plot.title);
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / 5, yv = y_lo + (y_hi - y_lo) * i / 5;
        out += "<line x1=\"" + num(sx(xv)) + "\" y1=\"" + num(kTop + ph) + "\" x2=\"" + num(sx(xv)) + "\" y2=\"" +
               num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
        out += text(sx(xv), kTop + ph + 18, num(xv));
        out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(sy(yv)) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
               num(sy(yv)) + "\" stroke=\"black\"/>\n";
        out += text(kLeft - 8, sy(yv) + 4, num(yv), "end");
    }
    out += text(kLeft + pw / 2, kHeight - 15, plot.x_label);
    out += text(18, kTop + ph / 2, plot.y_label, "middle",
                ("transform=\"rotate(-90 18 " + num(kTop + ph / 2) + ")\"").c_str());

    double legend_y = kTop + 10;
    for (const auto& s : plot.series) {
        const std::string dash = s.dashed ? " stroke-dasharray=\"6 4\"" : "";
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"2\"" + dash + " points=\"";
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (i) out += ' ';
            out += num(sx(s.x[i])) + "," + num(sy(std::clamp(s.y[i], y_lo, y_hi)));
        }
        out += "\"/>\n";
        const double lx = kLeft + pw + 10;
        out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(legend_y) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" +
               num(legend_y) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"" + dash + "/>\n";
        out += text(lx + 30, legend_y + 4, s.name, "start");
        legend_y += 18;
    }
    return out + "</svg>\n";
}

std::string render_density_heatmap(const qcore::DensityMatrix& rho, const std::string& title) {
    const std::size_t n = rho.dim();
    const double side = std::min(kWidth - kLeft - kRight, kHeight - kTop - kBottom);
    const double cell = side / double(n);
    double peak = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) peak = std::max(peak, std::abs(rho.matrix()(r, c)));
    if (peak == 0.0) peak = 1.0;

    std::string out = header(title);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const double a = std::abs(rho.matrix()(r, c));
            const int shade = static_cast<int>(std::lround(255.0 * (1.0 - a / peak)));
            char fill[16];
            std::snprintf(fill, sizeof fill, "#%02x%02xff", shade, shade);
            const double x = kLeft + cell * double(c), y = kTop + cell * double(r);
            out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cell) + "\" height=\"" +
                   num(cell) + "\" fill=\"" + fill + "\" stroke=\"#888\"/>\n";
            if (n <= 9) out += text(x + cell / 2, y + cell / 2 + 4, num(a));
        }
        const auto label = basis_label(rho.space(), r);
        out += text(kLeft - 8, kTop + cell * (double(r) + 0.5) + 4, label, "end");
        out += text(kLeft + cell * (double(r) + 0.5), kTop + side + 18, label);
    }
    out += text(kLeft + side / 2, kHeight - 15, "|rho_ij|, basis n_m n_c");
    return out + "</svg>\n";
}

std::string pair_trace_svg(const dynamics::EvolutionTrace& trace) {
    Series c{"concurrence", {}, {}, "#1f77b4", false};
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        if (!trace.concurrences[i]) continue;
        c.x.push_back(trace.times[i] * 1e9);
        c.y.push_back(*trace.concurrences[i]);
    }
    return render_line_plot({"Cavity-magnon concurrence", "t (ns)", "concurrence", {c}, 0.0, 1.0});
}

std::string chain_svg(const network::ChainReport& report, double f_min) {
    Series fid{"fidelity", {}, {}, "#1f77b4", false};
    Series thr{"threshold", {}, {}, "#d62728", true};
    Series cum{"P_cumulative", {}, {}, "#2ca02c", true};
    for (const auto& h : report.hops) {
        const double x = double(h.hop);
        fid.x.push_back(x), fid.y.push_back(h.fidelity);
        thr.x.push_back(x), thr.y.push_back(f_min);
        cum.x.push_back(x), cum.y.push_back(h.p_cumulative);
    }
    return render_line_plot({"Repeater chain: " + report.scenario, "hop", "fidelity / probability",
                             {fid, thr, cum}, 0.0, 1.0});
}

std::string sweep_svg(network::SweepAxis axis, const std::vector<network::SweepRow>& rows) {
    Series cum{"P_cumulative (last hop)", {}, {}, "#2ca02c", false};
    Series hop{"p_hop (last hop)", {}, {}, "#1f77b4", true};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool last = i + 1 == rows.size() || rows[i + 1].value != rows[i].value || rows[i + 1].record.hop <= rows[i].record.hop;
        if (!last) continue;
        cum.x.push_back(rows[i].value), cum.y.push_back(rows[i].record.p_cumulative);
        hop.x.push_back(rows[i].value), hop.y.push_back(rows[i].record.p_hop);
    }
    const std::string name(network::sweep_axis_name(axis));
    return render_line_plot({"Sweep over " + name, name, "probability", {cum, hop}, 0.0, 1.0});
}

}  // namespace cmrep::cli
