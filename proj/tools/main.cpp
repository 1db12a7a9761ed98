// subplanck: phase-space sections, tile analysis, overlap sweeps, validation
// and variance witness for the entangled compass state.
//
//   subplanck section  [--plane X1P1] [--format csv|json]
//   subplanck tile     [--plane X2P1] [--expect-lattice]
//   subplanck overlap  [--model entangled|compass|numeric] [--s VALUE]
//   subplanck validate
//   subplanck witness
//
// Common flags: --config PATH, --set KEY=VALUE (repeatable), --out DIR.
// Exit codes: 0 ok, 2 config, 3 numeric, 4 expectation, 5 conformance.

#include "commands.hpp"
#include "config.hpp"

#include "subplanck/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace subplanck;
using namespace subplanck::cli;

int main(int argc, char** argv) {
    CLI::App app{"Wigner-function numerics for the entangled compass state"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string plane;
    std::string out_dir;
    std::string format;
    CommandOptions options;
    std::string model;
    double s = 0.0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key = value config file");
        sub->add_option("--set", overrides, "override a config key (KEY=VALUE)")->take_all();
        sub->add_option("--out", out_dir, "output directory");
    };
    auto* section_cmd = app.add_subcommand("section", "sample W on a 2D section (CSV grid + JSON sidecar)");
    auto* tile_cmd = app.add_subcommand("tile", "zero lattice and fundamental tile of a section");
    auto* overlap_cmd = app.add_subcommand("overlap", "displacement-sensitivity overlap sweeps");
    auto* validate_cmd = app.add_subcommand("validate", "closed form versus oracle and invariant checks");
    auto* witness_cmd = app.add_subcommand("witness", "variance entanglement witness");
    for (auto* sub : {section_cmd, tile_cmd, overlap_cmd, validate_cmd, witness_cmd}) common(sub);
    for (auto* sub : {section_cmd, tile_cmd}) sub->add_option("--plane", plane, "X1P1, X2P2, X1P2, X2P1, X1X2 or P1P2");
    for (auto* sub : {section_cmd, overlap_cmd}) sub->add_option("--format", format, "csv or json");
    tile_cmd->add_flag("--expect-lattice", options.expect_lattice, "exit 4 when no lattice is found");
    auto* model_opt = overlap_cmd->add_option("--model", model, "entangled, compass or numeric");
    auto* s_opt = overlap_cmd->add_option("--s", s, "evaluate a single shift instead of sweeping");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) apply_config_file(config, config_path);
        for (const auto& kv : overrides) apply_override(config, kv);
        if (!plane.empty()) apply_setting(config, "plane", plane);
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (!format.empty()) config.format = format;
        if (model_opt->count() > 0) options.model = model;
        if (s_opt->count() > 0) options.s = s;

        if (*section_cmd) return cmd_section(config, std::cout);
        if (*tile_cmd) return cmd_tile(config, options, std::cout);
        if (*overlap_cmd) return cmd_overlap(config, options, std::cout);
        if (*validate_cmd) return cmd_validate(config, std::cout);
        if (*witness_cmd) return cmd_witness(config, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const InvalidArgument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const DegenerateState& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
