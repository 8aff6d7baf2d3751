#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "cmrep/cli/commands.hpp"
#include "cmrep/cli/config.hpp"
#include "cmrep/error.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kNumerical = 3, kIo = 4 };

int fail(int code, const char* kind, const std::exception& e) {
    std::fprintf(stderr, "cmrep: %s: %s\n", kind, e.what());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cmrep;

    CLI::App app{"Cavity-magnon entanglement and repeater-chain simulator"};
    std::string command;
    std::optional<std::string> scenario, config_path, out_dir, formats, sweep_axis, sweep_values;
    std::optional<std::size_t> hops;
    std::optional<std::uint64_t> seed;
    std::optional<double> pclick;
    bool ideal = false;

    app.add_option("command", command, "pair | swap | chain | sweep")->required();
    app.add_option("--config", config_path, "config file (key = value [unit] lines)");
    app.add_option("--scenario", scenario, "built-in scenario: chip-a..c, metro-a..c");
    app.add_option("--hops", hops, "number of repeater hops");
    app.add_option("--seed", seed, "seed for sampled measurement outcomes");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", formats, "comma-separated subset of csv,svg");
    app.add_option("--pclick-override", pclick, "fixed single-channel click probability");
    app.add_flag("--ideal", ideal, "switch off every dissipation channel");
    app.add_option("--sweep-axis", sweep_axis, "mux | conv | hops | length");
    app.add_option("--sweep-values", sweep_values, "comma-separated values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }

    try {
        auto cfg = config_path ? cli::load_config(*config_path) : cli::RunConfig{};
        cfg.command = cli::parse_command(command);
        if (scenario) cfg.scenario = network::find_scenario(*scenario);
        if (hops) cfg.hops = *hops;
        if (seed) cfg.seed = *seed;
        if (out_dir) cfg.output_dir = *out_dir;
        if (formats) cfg.formats = cli::parse_formats(*formats);
        if (pclick) cfg.pclick_override = *pclick;
        if (ideal) cfg.ideal = true;
        if (sweep_axis) cfg.sweep_axis = network::parse_sweep_axis(*sweep_axis);
        if (sweep_values) cfg.sweep_values = cli::parse_number_list(*sweep_values);

        for (const auto& path : cli::run(cfg)) std::printf("wrote %s\n", path.string().c_str());
        return kOk;
    } catch (const IoError& e) {
        return fail(kIo, "i/o error", e);
    } catch (const ConfigError& e) {
        return fail(kConfig, "config error", e);
    } catch (const RangeError& e) {
        return fail(kConfig, "config error", e);
    } catch (const LabelError& e) {
        return fail(kConfig, "config error", e);
    } catch (const Error& e) {
        return fail(kNumerical, "numerical failure", e);
    }
}
