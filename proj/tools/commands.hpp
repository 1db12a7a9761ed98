#pragma once

#include "config.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace subplanck::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfig = 2,
    kNumeric = 3,
    kExpectation = 4,
    kConformance = 5,
};

struct CommandOptions {
    bool expect_lattice = false;
    std::optional<std::string> model;
    std::optional<double> s;
};

/// Each command validates `config` first (throwing ConfigError before any
/// file is written), prints a JSON summary to `out` and returns an exit code.
int cmd_section(const RunConfig& config, std::ostream& out);
int cmd_tile(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_overlap(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_validate(const RunConfig& config, std::ostream& out);
int cmd_witness(const RunConfig& config, std::ostream& out);

} // namespace subplanck::cli
