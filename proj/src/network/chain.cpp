#include "cmrep/network/chain.hpp"

#include <algorithm>
#include <cmath>

#include "cmrep/error.hpp"

namespace cmrep::network {

namespace {

constexpr double kThresholdSlack = 1e-12;

void require_probability(const char* what, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw RangeError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

double link_efficiency(const ScenarioParams& s) {
    s.validate();
    const double conv = s.eta_conv ? (*s.eta_conv) * (*s.eta_conv) : 1.0;
    return std::pow(10.0, -s.alpha_db_per_km * s.span_km / 10.0) * conv * s.eta_extra;
}

double click_probability(const ScenarioParams& s) {
    const double link = link_efficiency(s);
    return s.p_bsa * s.eta_det * s.eta_det * s.eta_col * s.eta_col * link * link * s.eta_read;
}

double hop_success(double p_click, unsigned m_mux) {
    require_probability("hop_success: p_click", p_click);
    if (m_mux < 1) throw RangeError("hop_success: m_mux must be >= 1");
    if (m_mux == 1) return p_click;
    // 1 - (1-p)^M without cancellation for tiny p.
    return -std::expm1(static_cast<double>(m_mux) * std::log1p(-p_click));
}

std::vector<double> cumulative_success(std::span<const double> per_hop) {
    std::vector<double> out;
    out.reserve(per_hop.size());
    double acc = 1.0;
    for (double p : per_hop) {
        require_probability("cumulative_success: per-hop probability", p);
        acc *= p;
        out.push_back(acc);
    }
    return out;
}

double effective_purity(std::size_t hops, const NoiseModel& nm) {
    nm.validate();
    if (hops < 1) throw RangeError("chain_fidelity: hops must be >= 1");
    return std::pow(nm.p_link, static_cast<double>(hops)) * std::pow(nm.q_swap, static_cast<double>(hops - 1));
}

HopFidelity chain_fidelity(std::size_t hops, const NoiseModel& nm) {
    const double p = effective_purity(hops, nm);
    return {(3.0 * p + 1.0) / 4.0, std::max(0.0, (3.0 * p - 1.0) / 2.0)};
}

bool meets_fidelity(double fidelity, double f_min) { return fidelity >= f_min - kThresholdSlack; }

ChainReport simulate_chain(std::span<const ScenarioParams> hops, const NoiseModel& nm, ChainOptions options) {
    if (hops.empty()) throw RangeError("simulate_chain: hops must be >= 1");
    if (options.pclick_override) require_probability("pclick override", *options.pclick_override);
    nm.validate();

    std::vector<double> per_hop;
    per_hop.reserve(hops.size());
    for (const auto& s : hops) {
        const double p_click = options.pclick_override ? *options.pclick_override : click_probability(s);
        per_hop.push_back(hop_success(p_click, s.m_mux));
    }
    const auto cumulative = cumulative_success(per_hop);

    ChainReport report{hops.front().name, {}};
    for (std::size_t h = 1; h <= hops.size(); ++h) {
        const auto f = chain_fidelity(h, nm);
        report.hops.push_back({h, f.fidelity, f.concurrence, per_hop[h - 1], cumulative[h - 1],
                               meets_fidelity(f.fidelity, options.f_min)});
    }
    return report;
}

ChainReport simulate_chain(const ScenarioParams& s, std::size_t hops, const NoiseModel& nm, ChainOptions options) {
    if (hops < 1) throw RangeError("simulate_chain: hops must be >= 1");
    const std::vector<ScenarioParams> chain(hops, s);
    return simulate_chain(std::span<const ScenarioParams>(chain), nm, options);
}

std::size_t threshold_hops(const NoiseModel& nm, double f_min) {
    nm.validate();
    if (!(f_min > 0.0 && f_min < 1.0)) throw RangeError("threshold_hops: f_min must lie in (0, 1)");
    const auto passes = [&](std::size_t h) { return meets_fidelity(chain_fidelity(h, nm).fidelity, f_min); };

    // Fully depolarized pairs still have F = 1/4.
    if (meets_fidelity(0.25, f_min)) return kUnboundedHops;
    if (nm.p_link == 1.0 && nm.q_swap == 1.0) return kUnboundedHops;
    if (!passes(1)) return 0;
    if (nm.p_link == 0.0 || nm.q_swap == 0.0) return 1;

    // p^h q^(h-1) >= (4 f - 1)/3  <=>  h <= (ln t + ln q) / (ln p + ln q)
    const double target = (4.0 * f_min - 1.0) / 3.0;
    const double lp = std::log(nm.p_link);
    const double lq = std::log(nm.q_swap);
    auto h = static_cast<std::size_t>(std::max(1.0, std::floor((std::log(target) + lq) / (lp + lq))));
    while (h > 1 && !passes(h)) --h;
    while (passes(h + 1)) ++h;
    return h;
}

}  // namespace cmrep::network
