#pragma once

#include "subplanck/analysis.hpp"
#include "subplanck/sensitivity.hpp"
#include "subplanck/states.hpp"
#include "subplanck/wigner_oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace subplanck {

struct CheckResult {
    std::string name;
    bool mandatory = true;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ConformanceOptions {
    QuadratureSpec quad;
    std::size_t oracle_points = 200;
    std::uint64_t seed = 0x5eed;
    std::size_t section_resolution = 512;
    NormalizationOptions normalization;
    bool run_normalization = true;
};

struct ConformanceReport {
    std::vector<CheckResult> checks;
    bool mandatory_passed() const;
};

/// Random phase points in the box |x| <= |x0| + 2 delta, |p| <= |p0| + 2 hbar/delta.
std::vector<PhasePoint> random_phase_points(const StateParams& params, std::size_t count, std::uint64_t seed);

/// Runs the closed-form versus oracle comparison, the Wigner axioms, the
/// lattice and gating checks, and the sensitivity minima as mandatory checks,
/// plus non-mandatory reports on the printed forms. A check that throws is
/// recorded as failed with the error text.
ConformanceReport run_conformance(const NormalizedState& state, const ConformanceOptions& options);

} // namespace subplanck
