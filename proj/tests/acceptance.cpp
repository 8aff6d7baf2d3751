// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cmrep/cli/config.hpp"
#include "cmrep/dynamics/hamiltonian.hpp"
#include "cmrep/dynamics/lindblad.hpp"
#include "cmrep/network/chain.hpp"
#include "cmrep/network/pipeline.hpp"
#include "cmrep/network/scenario.hpp"
#include "cmrep/qcore/eig.hpp"
#include "cmrep/qcore/metrics.hpp"
#include "cmrep/swap/bell.hpp"
#include "oracles.hpp"

using namespace cmrep;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

// |0_m 1_c> and |1_m 0_c> in the (m, c) product basis.
constexpr std::size_t k01 = 1, k10 = 2;

Verdict pair_generation() {
    const auto start = std::chrono::steady_clock::now();
    const auto trace = dynamics::pair_generation_trace(dynamics::LindbladParams{});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double peak = 0.0;
    for (const auto& c : trace.concurrences) peak = std::max(peak, c.value_or(0.0));
    return {within(peak, 0.97, 0.02) && seconds < 10.0,
            fmt("peak concurrence %.5f (target 0.97 +/- 0.02), runtime %.3f s (< 10 s)", peak, seconds)};
}

Verdict snapshot() {
    const auto pair = dynamics::generate_bell_pair(dynamics::LindbladParams{});
    const auto& m = pair.state.matrix();
    const double p01 = m(k01, k01).real(), p10 = m(k10, k10).real();
    const double coh = std::abs(m(k01, k10));
    const bool pops = p01 >= 0.46 && p01 <= 0.50 && p10 >= 0.46 && p10 <= 0.50;
    return {pops && within(coh, 0.47, 0.02),
            fmt("populations %.5f, %.5f (in [0.46, 0.50]); coherence %.5f (target 0.47 +/- 0.02)", p01, p10, coh)};
}

Verdict ideal_limit() {
    const auto p = dynamics::LindbladParams{}.ideal();
    const auto pair = dynamics::generate_bell_pair(p);
    const auto rho0 = qcore::DensityMatrix::basis(dynamics::node_space(p), {0, 1});
    const auto n = dynamics::excitation_number(p);
    const auto trace = dynamics::evolve(rho0, p, dynamics::bell_pair_time(p), dynamics::default_time_step(p), 1);
    double drift = 0.0;
    for (const auto& s : trace.states) drift = std::max(drift, std::abs((n * s.matrix()).trace() - 1.0));
    return {pair.fidelity >= 0.999 && drift <= 1e-8,
            fmt("fidelity %.12f (>= 0.999), excitation drift %.2e (<= 1e-8)", pair.fidelity, drift)};
}

Verdict swap_oracle() {
    const std::vector<std::string> labels{"q0", "q1", "q2", "q3"};
    const auto space = qcore::HilbertSpec::qubits(labels);
    const std::pair<int, int> pairs[] = {{1, 2}, {0, 1}, {2, 3}, {0, 3}, {1, 3}};
    std::mt19937_64 rng(20240601);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto raw = oracle::random_density(16, rng);
        const qcore::DensityMatrix rho(space, oracle::from_eigen(raw));
        const auto [a, b] = pairs[trial % 5];
        for (int j = 0; j < 4; ++j) {
            const auto want = oracle::bsm_brute_force(raw, a, b, j);
            const auto got = swap::bsm(rho, labels[a], labels[b], qcore::bell_kind_from_index(j));
            worst = std::max(worst, std::abs(got.probability - want.probability));
            worst = std::max(worst, (oracle::to_eigen(got.post_state.matrix()) - want.post).cwiseAbs().maxCoeff());
        }
    }
    const auto input = qcore::tensor(qcore::bell_state(qcore::BellKind::psi_minus, {"q0", "q1"}),
                                     qcore::bell_state(qcore::BellKind::psi_minus, {"q2", "q3"}));
    const auto singlet = qcore::bell_state(qcore::BellKind::psi_minus, {"q0", "q3"});
    double worst_fid = 0.0;
    for (int j = 0; j < 4; ++j) {
        const auto r = swap::bsm(input, "q1", "q2", qcore::bell_kind_from_index(j));
        worst_fid = std::max(worst_fid, std::abs(1.0 - qcore::fidelity(r.post_state, singlet)));
    }
    return {worst < 1e-10 && worst_fid < 1e-10,
            fmt("max deviation from brute force %.2e (< 1e-10) over 50 inputs; singlet restore error %.2e (< 1e-10)",
                worst, worst_fid)};
}

Verdict werner_closure() {
    const network::NoiseModel perfect_swaps{0.94, 1.0};
    double worst_state = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto got = network::exact_chain_state(n, perfect_swaps);
        const auto want = qcore::werner_state(std::pow(0.94, double(n)), {"a", "b"});
        worst_state = std::max(worst_state, (got.matrix() - want.matrix()).max_abs());
    }
    double worst_fid = 0.0;
    for (std::size_t h = 1; h <= 4; ++h) {
        const auto a = network::chain_fidelity(h, network::NoiseModel{});
        const auto e = network::exact_chain_fidelity(h, network::NoiseModel{});
        worst_fid = std::max({worst_fid, std::abs(a.fidelity - e.fidelity), std::abs(a.concurrence - e.concurrence)});
    }
    return {worst_state < 1e-9 && worst_fid < 1e-9,
            fmt("Werner(p^n) deviation %.2e (< 1e-9), analytic vs exact pipeline %.2e (< 1e-9)", worst_state,
                worst_fid)};
}

Verdict multiplexing() {
    const double m8 = network::hop_success(0.18, 8), m30 = network::hop_success(0.18, 30);
    const auto cum = network::cumulative_success(std::vector<double>(4, 0.18));
    return {within(m8, 0.78, 0.02) && within(m30, 0.98, 0.02) && within(cum[3], 0.00105, 5e-6) && cum[3] < 0.05,
            fmt("M=8 %.4f (0.78 +/- 0.02), M=30 %.4f (0.98 +/- 0.02), 4-hop single channel %.5f (< 0.05)", m8, m30,
                cum[3])};
}

Verdict fidelity_decline() {
    const network::NoiseModel nm{0.94, 0.967};
    const auto report = network::simulate_chain(network::find_scenario("chip-a"), 4, nm);
    const double f1 = report.hops[0].fidelity, f4 = report.hops[3].fidelity;
    const bool usable = std::all_of(report.hops.begin(), report.hops.end(), [](const auto& h) { return h.usable; });
    return {within(f1, 0.955, 0.01) && within(f4, 0.78, 0.01) && usable,
            fmt("F1 %.5f (0.955 +/- 0.01), F4 %.5f (0.78 +/- 0.01), all hops usable: %s", f1, f4,
                usable ? "yes" : "no")};
}

Verdict heralded() {
    const double at0 = swap::heralded_link_probability(0.0, 10.0);
    const double at10 = swap::heralded_link_probability(10.0, 10.0);
    return {within(at0, 0.5, 1e-6) && within(at10, 0.1839, 1e-4) && within(at10, std::exp(-1.0) / 2, 1e-12),
            fmt("L=0: %.7f (0.5), L=d=10 km: %.7f (0.1839)", at0, at10)};
}

Verdict scenario_ingestion() {
    bool round_trip = true;
    for (const auto& s : network::builtin_scenarios())
        round_trip = round_trip && cli::parse_config(cli::serialize_scenario(s)).scenario == s;

    // Table values, with chip rows in their native dB/cm and cm.
    struct Row {
        const char* name;
        double alpha_native, span_native, conv, extra, det, p_bsa;
        unsigned mux;
    };
    const Row table[] = {
        {"chip-a", 0.20, 1, -1, 0.98, 0.98, 0.50, 1},  {"chip-b", 0.20, 1, -1, 0.98, 0.98, 0.50, 8},
        {"chip-c", 0.20, 1, -1, 0.98, 0.98, 0.75, 30}, {"metro-a", 0.35, 10, 0.005, 0.90, 0.80, 0.50, 1},
        {"metro-b", 0.20, 10, 0.50, 0.95, 0.98, 0.50, 8}, {"metro-c", 0.16, 10, 0.80, 0.95, 0.98, 0.75, 30},
    };
    bool values = true;
    for (const auto& r : table) {
        const auto& s = network::find_scenario(r.name);
        const bool chip = r.conv < 0;
        const double alpha = chip ? s.alpha_db_per_km / 1e5 : s.alpha_db_per_km;
        const double span = chip ? s.span_km * 1e5 : s.span_km;
        values = values && alpha == r.alpha_native && span == r.span_native && s.eta_read == 0.62 &&
                 (chip ? !s.eta_conv.has_value() : s.eta_conv == r.conv) && s.eta_extra == r.extra &&
                 s.eta_det == r.det && s.eta_col == 0.95 && s.p_bsa == r.p_bsa && s.m_mux == r.mux;
    }

    const double metro_a = network::click_probability(network::find_scenario("metro-a"));
    auto s = network::find_scenario("metro-b");
    s.eta_conv = 0.3;
    const double base = network::click_probability(s);
    s.eta_conv = 0.6;
    const double ratio = network::click_probability(s) / base;
    return {round_trip && values && metro_a < 1e-8 && std::abs(ratio - 16.0) < 1e-9,
            fmt("round trip %s, table values %s, Metro-A P_click %.3e (< 1e-8), doubling eta_conv x%.12f (16)",
                round_trip ? "exact" : "MISMATCH", values ? "exact" : "MISMATCH", metro_a, ratio)};
}

Verdict hygiene() {
    const dynamics::LindbladParams p;
    const auto rho0 = qcore::DensityMatrix::basis(dynamics::node_space(p), {0, 1});
    const double t = dynamics::bell_pair_time(p);
    const double dt = dynamics::default_time_step(p);
    const auto trace = dynamics::evolve(rho0, p, t, dt, 1);
    double herm = 0.0, tr = 0.0, min_eig = 1.0;
    for (const auto& s : trace.states) {
        herm = std::max(herm, s.matrix().hermiticity_error());
        tr = std::max(tr, std::abs(s.matrix().trace() - 1.0));
        min_eig = std::min(min_eig, qcore::hermitian_eigenvalues(s.matrix()).back());
    }
    const bool invariants = herm < 1e-12 && tr < 1e-6 && min_eig > -1e-9;

    const auto target = dynamics::bell_pair_target(p);
    const double f_coarse = qcore::overlap_fidelity(trace.final_state, target);
    const double f_fine =
        qcore::overlap_fidelity(dynamics::evolve(rho0, p, t, dt / 2, 1000000).final_state, target);
    const double halving = std::abs(f_coarse - f_fine);

    dynamics::EvolveOptions full{dynamics::HamiltonianModel::full};
    const double gap = std::abs(dynamics::generate_bell_pair(p).fidelity - dynamics::generate_bell_pair(p, full).fidelity);
    return {invariants && halving < 1e-6 && gap < 0.01,
            fmt("%zu steps: max |H-H^dag| %.1e, max |tr-1| %.1e, min eig %.1e; step halving %.1e (< 1e-6); "
                "full vs RWA %.1e (< 0.01)",
                trace.states.size(), herm, tr, min_eig, halving, gap)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"pair generation", pair_generation},   {"density-matrix snapshot", snapshot},
        {"ideal-limit exactness", ideal_limit}, {"swap oracle equivalence", swap_oracle},
        {"Werner closure", werner_closure},     {"multiplexing arithmetic", multiplexing},
        {"fidelity decline", fidelity_decline}, {"heralded link probability", heralded},
        {"scenario ingestion", scenario_ingestion}, {"numerical hygiene", hygiene},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed;
}
