#include "cmrep/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cmrep/cli/units.hpp"
#include "cmrep/error.hpp"

namespace cmrep::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw ConfigError("expected a number, got '" + std::string(s) + "'");
    return v;
}

std::uint64_t parse_unsigned(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

bool parse_bool(std::string_view s) {
    const auto v = lower(s);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw ConfigError("expected true or false, got '" + std::string(s) + "'");
}

struct Entry {
    std::string raw;
    std::string value;
    std::string unit;
    std::size_t line = 0;
};

// Splits "0.2 dB_per_cm" into number and unit; `raw` keeps the whole value
// for names, paths and lists.
Entry split_value(std::string_view raw, std::size_t line) {
    Entry e{std::string(raw), std::string(raw), {}, line};
    const auto sp = raw.find_first_of(" \t");
    if (sp != std::string_view::npos) {
        e.value = std::string(trim(raw.substr(0, sp)));
        e.unit = std::string(trim(raw.substr(sp)));
    }
    return e;
}

double quantity(const Entry& e, Dimension d) { return to_canonical(parse_double(e.value), e.unit, d); }

using Setter = std::function<void(RunConfig&, const Entry&)>;

template <class F>
Setter plain(F f) {
    return [f](RunConfig& c, const Entry& e) { f(c, e.raw); };
}

Setter scenario_prob(double network::ScenarioParams::*field) {
    return [field](RunConfig& c, const Entry& e) { c.scenario.*field = quantity(e, Dimension::dimensionless); };
}

Setter node_rate(double dynamics::LindbladParams::*field) {
    return [field](RunConfig& c, const Entry& e) { c.lindblad.*field = quantity(e, Dimension::frequency); };
}

Setter node_dim(std::size_t dynamics::LindbladParams::*field) {
    return plain([field](RunConfig& c, const std::string& v) { c.lindblad.*field = parse_unsigned(v); });
}

// Every key except `scenario`, which is applied before the others.
const std::map<std::string, Setter>& setters() {
    using network::ScenarioParams;
    using dynamics::LindbladParams;
    static const std::map<std::string, Setter> table{
        {"command", plain([](RunConfig& c, const std::string& v) { c.command = parse_command(v); })},
        {"name", plain([](RunConfig& c, const std::string& v) { c.scenario.name = v; })},
        {"alpha", [](RunConfig& c, const Entry& e) { c.scenario.alpha_db_per_km = quantity(e, Dimension::attenuation); }},
        {"span", [](RunConfig& c, const Entry& e) { c.scenario.span_km = quantity(e, Dimension::length); }},
        {"eta_read", scenario_prob(&ScenarioParams::eta_read)},
        {"eta_conv",
         plain([](RunConfig& c, const std::string& v) {
             if (v == "--" || lower(v) == "none")
                 c.scenario.eta_conv.reset();
             else
                 c.scenario.eta_conv = parse_double(v);
         })},
        {"eta_extra", scenario_prob(&ScenarioParams::eta_extra)},
        {"eta_det", scenario_prob(&ScenarioParams::eta_det)},
        {"eta_col", scenario_prob(&ScenarioParams::eta_col)},
        {"p_bsa", scenario_prob(&ScenarioParams::p_bsa)},
        {"m_mux",
         plain([](RunConfig& c, const std::string& v) {
             const auto m = parse_unsigned(v);
             if (m > 1000000) throw ConfigError("m_mux is implausibly large");
             c.scenario.m_mux = static_cast<unsigned>(m);
         })},
        {"hops", plain([](RunConfig& c, const std::string& v) { c.hops = parse_unsigned(v); })},
        {"p_link", plain([](RunConfig& c, const std::string& v) { c.noise.p_link = parse_double(v); })},
        {"q_swap", plain([](RunConfig& c, const std::string& v) { c.noise.q_swap = parse_double(v); })},
        {"omega_c", node_rate(&LindbladParams::omega_c)},
        {"omega_m", node_rate(&LindbladParams::omega_m)},
        {"g_mc", node_rate(&LindbladParams::g_mc)},
        {"kappa_d", node_rate(&LindbladParams::kappa_d)},
        {"gamma_d", node_rate(&LindbladParams::gamma_d)},
        {"kappa_phi", node_rate(&LindbladParams::kappa_phi)},
        {"gamma_phi", node_rate(&LindbladParams::gamma_phi)},
        {"dim_c", node_dim(&LindbladParams::dim_c)},
        {"dim_m", node_dim(&LindbladParams::dim_m)},
        {"model",
         plain([](RunConfig& c, const std::string& v) {
             const auto m = lower(v);
             if (m == "rwa")
                 c.model = dynamics::HamiltonianModel::rwa;
             else if (m == "full")
                 c.model = dynamics::HamiltonianModel::full;
             else
                 throw ConfigError("model must be rwa or full");
         })},
        {"t_final", [](RunConfig& c, const Entry& e) { c.t_final = quantity(e, Dimension::time); }},
        {"samples", plain([](RunConfig& c, const std::string& v) { c.samples = parse_unsigned(v); })},
        {"seed", plain([](RunConfig& c, const std::string& v) { c.seed = parse_unsigned(v); })},
        {"output_dir", plain([](RunConfig& c, const std::string& v) { c.output_dir = v; })},
        {"format", plain([](RunConfig& c, const std::string& v) { c.formats = parse_formats(v); })},
        {"pclick_override", plain([](RunConfig& c, const std::string& v) { c.pclick_override = parse_double(v); })},
        {"ideal", plain([](RunConfig& c, const std::string& v) { c.ideal = parse_bool(v); })},
        {"sweep_axis", plain([](RunConfig& c, const std::string& v) { c.sweep_axis = network::parse_sweep_axis(v); })},
        {"sweep_values", plain([](RunConfig& c, const std::string& v) { c.sweep_values = parse_number_list(v); })},
    };
    return table;
}

std::string located(std::string_view origin, std::size_t line, const std::string& msg) {
    return std::string(origin) + ":" + std::to_string(line) + ": " + msg;
}

}  // namespace

Command parse_command(std::string_view name) {
    const auto n = lower(name);
    if (n == "pair") return Command::pair;
    if (n == "swap") return Command::swap;
    if (n == "chain") return Command::chain;
    if (n == "sweep") return Command::sweep;
    throw ConfigError("unknown command '" + std::string(name) + "'; expected pair, swap, chain or sweep");
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::pair: return "pair";
        case Command::swap: return "swap";
        case Command::chain: return "chain";
        case Command::sweep: return "sweep";
    }
    return "?";
}

OutputFormats parse_formats(std::string_view list) {
    OutputFormats f{false, false};
    std::stringstream ss{std::string(list)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto v = lower(trim(item));
        if (v == "csv")
            f.csv = true;
        else if (v == "svg")
            f.svg = true;
        else
            throw ConfigError("unknown output format '" + std::string(trim(item)) + "'; expected csv or svg");
    }
    if (f.empty()) throw ConfigError("no output format selected");
    return f;
}

std::vector<double> parse_number_list(std::string_view list) {
    std::vector<double> out;
    std::stringstream ss{std::string(list)};
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item)));
    return out;
}

dynamics::LindbladParams RunConfig::node() const { return ideal ? lindblad.ideal() : lindblad; }

void RunConfig::validate() const {
    if (formats.empty()) throw ConfigError("no output format selected");
    scenario.validate();
    noise.validate();
    lindblad.validate();
    if (hops < 1) throw RangeError("hops must be >= 1");
    if (samples < 2) throw RangeError("samples must be >= 2");
    if (t_final && !(*t_final > 0.0)) throw RangeError("t_final must be positive");
    if (pclick_override && !(*pclick_override >= 0.0 && *pclick_override <= 1.0))
        throw RangeError("pclick_override must lie in [0, 1]");
    if (command == Command::sweep && sweep_values.empty()) throw RangeError("sweep needs at least one value");
}

RunConfig parse_config(std::string_view text, std::string_view origin) {
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(located(origin, line_no, "expected 'key = value'"));
        const auto key = lower(trim(line.substr(0, eq)));
        const auto raw = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(located(origin, line_no, "missing key"));
        if (raw.empty()) throw ConfigError(located(origin, line_no, "missing value for '" + key + "'"));
        if (key != "scenario" && !setters().contains(key))
            throw ConfigError(located(origin, line_no, "unknown key '" + key + "'"));
        if (entries.contains(key))
            throw ConfigError(located(origin, line_no, "duplicate key '" + key + "' (first on line " +
                                                           std::to_string(entries[key].line) + ")"));
        entries[key] = split_value(raw, line_no);
    }

    RunConfig cfg;
    if (const auto it = entries.find("scenario"); it != entries.end()) {
        try {
            cfg.scenario = network::find_scenario(it->second.raw);
        } catch (const Error& e) {
            throw ConfigError(located(origin, it->second.line, e.what()));
        }
    }
    for (const auto& [key, entry] : entries) {
        if (key == "scenario") continue;
        try {
            setters().at(key)(cfg, entry);
        } catch (const Error& e) {
            throw ConfigError(located(origin, entry.line, key + ": " + e.what()));
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

std::string serialize_scenario(const network::ScenarioParams& s) {
    auto g17 = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string out;
    out += "name = " + s.name + "\n";
    out += "alpha = " + g17(s.alpha_db_per_km) + " dB_per_km\n";
    out += "span = " + g17(s.span_km) + " km\n";
    out += "eta_read = " + g17(s.eta_read) + "\n";
    out += "eta_conv = " + (s.eta_conv ? g17(*s.eta_conv) : std::string("--")) + "\n";
    out += "eta_extra = " + g17(s.eta_extra) + "\n";
    out += "eta_det = " + g17(s.eta_det) + "\n";
    out += "eta_col = " + g17(s.eta_col) + "\n";
    out += "p_bsa = " + g17(s.p_bsa) + "\n";
    out += "m_mux = " + std::to_string(s.m_mux) + "\n";
    return out;
}

}  // namespace cmrep::cli
