#include "cmrep/cli/csv.hpp"

#include <cstdio>
#include <fstream>

#include "cmrep/error.hpp"
#include "cmrep/qcore/metrics.hpp"

namespace cmrep::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw ShapeError("csv: row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    auto join = [](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        return line + '\n';
    };
    std::string out = join(header_);
    for (const auto& r : rows_) out += join(r);
    return out;
}

std::string basis_label(const qcore::HilbertSpec& space, std::size_t flat) {
    const auto digits = space.digits(flat);
    bool wide = false;
    for (const auto& s : space.subsystems()) wide = wide || s.dim > 10;
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (wide && i) out += '_';
        out += std::to_string(digits[i]);
    }
    return out;
}

CsvTable pair_trace_table(const dynamics::EvolutionTrace& trace) {
    const auto& space = trace.final_state.space();
    std::vector<std::string> header{"t_ns", "concurrence"};
    for (std::size_t k = 0; k < space.total_dim(); ++k) header.push_back("pop_" + basis_label(space, k));
    CsvTable table(std::move(header));
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        std::vector<std::string> row{format_number(trace.times[i] * 1e9),
                                     trace.concurrences[i] ? format_number(*trace.concurrences[i]) : std::string()};
        for (double p : trace.populations[i]) row.push_back(format_number(p));
        table.add_row(std::move(row));
    }
    return table;
}

CsvTable density_table(const qcore::DensityMatrix& rho) {
    CsvTable table({"row_label", "col_label", "re", "im", "abs"});
    const auto& m = rho.matrix();
    for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c)
            table.add_row({basis_label(rho.space(), r), basis_label(rho.space(), c), format_number(m(r, c).real()),
                           format_number(m(r, c).imag()), format_number(std::abs(m(r, c)))});
    return table;
}

CsvTable chain_table(const network::ChainReport& report) {
    CsvTable table({"hop", "fidelity", "concurrence", "p_hop", "p_cumulative", "usable"});
    for (const auto& h : report.hops)
        table.add_row({std::to_string(h.hop), format_number(h.fidelity), format_number(h.concurrence),
                       format_number(h.p_hop), format_number(h.p_cumulative), h.usable ? "1" : "0"});
    return table;
}

CsvTable sweep_table(network::SweepAxis axis, const std::vector<network::SweepRow>& rows) {
    CsvTable table({std::string(network::sweep_axis_name(axis)), "p_click", "hop", "fidelity", "concurrence", "p_hop",
                    "p_cumulative", "usable"});
    for (const auto& r : rows) {
        const auto& h = r.record;
        table.add_row({format_number(r.value), format_number(r.p_click), std::to_string(h.hop),
                       format_number(h.fidelity), format_number(h.concurrence), format_number(h.p_hop),
                       format_number(h.p_cumulative), h.usable ? "1" : "0"});
    }
    return table;
}

CsvTable swap_table(const swap::RepeaterRun& run) {
    CsvTable table({"stage", "measured", "outcome", "probability", "concurrence", "singlet_fidelity"});
    const auto singlet = qcore::bell_ket(qcore::BellKind::psi_minus);
    auto add = [&](const char* stage, const char* measured, const swap::SwapResult& r) {
        table.add_row({stage, measured, std::string(qcore::bell_name(r.outcome.label)), format_number(r.probability),
                       format_number(qcore::concurrence(r.post_state)),
                       format_number(qcore::overlap_fidelity(r.post_state, singlet))});
    };
    add("left", "c1c2", run.left);
    add("right", "c3c4", run.right);
    add("middle", "c2c3", run.middle);
    return table;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace cmrep::cli
