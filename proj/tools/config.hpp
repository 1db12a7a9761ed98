#pragma once

#include "subplanck/phase_space.hpp"
#include "subplanck/states.hpp"
#include "subplanck/wigner_oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subplanck::cli {

/// Bad config text, unknown key or invalid value. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a run needs. Defaults reproduce the reference regime.
struct RunConfig {
    StateParams state;
    SectionSpec section;
    /// Oracle shift window and node count; 0 selects the state-derived
    /// default (H = 2 (2 x0 + 10 delta), at least 2048 nodes).
    double half_width = 0.0;
    std::size_t nodes = 0;
    QuadratureSpec::Rule rule = QuadratureSpec::Rule::GaussLegendre;
    std::string out_dir = "out";
    std::string format = "csv";

    double contrast_threshold = 0.5;
    std::size_t samples_per_period = 400;
    /// Upper end of overlap sweeps; 0 means pi hbar / |x0|.
    double s_max = 0.0;
    std::size_t oracle_points = 200;
    std::uint64_t seed = 0x5eed;
    std::size_t normalization_nodes = 73;

    /// Checks every downstream precondition that can be checked without
    /// computing anything. Throws ConfigError.
    void validate() const;

    QuadratureSpec quadrature() const;
};

/// Recognized keys, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Applies one key = value assignment. Throws ConfigError.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses flat `key = value` text (a TOML subset: `#` comments, optional
/// double quotes around values, blank lines) on top of `config`.
void apply_config_text(RunConfig& config, std::string_view text);

/// Parses a `KEY=VALUE` command-line override.
void apply_override(RunConfig& config, std::string_view assignment);

/// Reads and applies a config file.
void apply_config_file(RunConfig& config, const std::string& path);

} // namespace subplanck::cli
