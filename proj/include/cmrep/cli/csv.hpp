#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cmrep/dynamics/lindblad.hpp"
#include "cmrep/network/chain.hpp"
#include "cmrep/network/sweep.hpp"
#include "cmrep/swap/repeater.hpp"

namespace cmrep::cli {

/// Fixed 9-significant-digit rendering used in every table.
std::string format_number(double v);

/// Header row plus data rows; cells are written verbatim, LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    const std::vector<std::string>& header() const { return header_; }
    std::size_t rows() const { return rows_.size(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Basis label of a node index, digits in (n_m, n_c) order: "01" is |0_m 1_c>.
std::string basis_label(const qcore::HilbertSpec& space, std::size_t flat);

/// t_ns, concurrence, pop_00, pop_01, pop_10, pop_11 (one pop column per basis state).
CsvTable pair_trace_table(const dynamics::EvolutionTrace& trace);

/// row_label, col_label, re, im, abs
CsvTable density_table(const qcore::DensityMatrix& rho);

/// hop, fidelity, concurrence, p_hop, p_cumulative, usable
CsvTable chain_table(const network::ChainReport& report);

/// <axis>, p_click, hop, fidelity, concurrence, p_hop, p_cumulative, usable
CsvTable sweep_table(network::SweepAxis axis, const std::vector<network::SweepRow>& rows);

/// stage, measured, outcome, probability, concurrence, singlet_fidelity
CsvTable swap_table(const swap::RepeaterRun& run);

/// Writes `content` byte for byte; IoError naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace cmrep::cli
