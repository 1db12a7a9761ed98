#pragma once

#include "subplanck/phase_space.hpp"
#include "subplanck/states.hpp"

#include <cstddef>
#include <vector>

namespace subplanck {

/// Full oscillation period of the interference lattice along a coordinate:
/// pi hbar / p0 for positions, pi hbar / x0 for momenta.
double predicted_period(Coord axis, const StateParams& params);

/// (2 pi hbar)^2 / (4 x0 p0).
double predicted_tile_area(const StateParams& params);

/// Sign changes of samples ys over xs, located by linear interpolation.
std::vector<double> sign_changes(const std::vector<double>& xs, const std::vector<double>& ys);

struct LatticeOptions {
    /// Zeros are collected where |axis - centre| <= window_periods * period.
    double window_periods = 3.0;
    std::size_t min_sign_changes = 4;
};

struct TileReport {
    std::vector<double> zeros_axis1;
    std::vector<double> zeros_axis2;
    /// Value of the other axis on the scan line each zero list came from.
    double line1 = 0.0;
    double line2 = 0.0;
    double period1 = 0.0;
    double period2 = 0.0;
    double tile_area = 0.0;
    double predicted_area = 0.0;
    double relative_error = 0.0;
};

/// Zero lattice of a section. For each axis, scan lines parallel to it lying
/// within half a predicted period of the section centre are searched and the
/// one with the most sign changes (then the most uniform spacing, then the
/// nearest to the centre) is kept. Its zeros give the period as the median of
/// z[i+2] - z[i]; the tile is period1 * period2.
/// Throws NoLatticeError when an axis has fewer than min_sign_changes zeros.
TileReport find_zero_lattice(const Grid2D& grid, const StateParams& params, const LatticeOptions& options = {});

struct CheckerboardOptions {
    double window_periods = 2.0;
    double contrast_threshold = 0.5;
};

struct CheckerboardResult {
    bool detected = false;
    /// (max - min) / (|max| + |min|) over the central window.
    double contrast = 0.0;
    std::size_t sign_changes_axis1 = 0;
    std::size_t sign_changes_axis2 = 0;
};

/// True iff the central window shows sign alternation (at least two sign
/// changes on some scan line) along both axes and the contrast exceeds the
/// threshold. Degenerate grids give false.
CheckerboardResult checkerboard_detect(const Grid2D& grid, const StateParams& params,
                                       const CheckerboardOptions& options = {});

struct MarginalOptions {
    /// Trapezoid nodes per momentum axis over +/-(p0 + 8 hbar/delta).
    std::size_t nodes = 97;
};

/// int W dp1 dp2 of the closed-form W on the (x1, x2) product grid.
/// values[j * xs1.size() + i] belongs to (xs1[i], xs2[j]).
std::vector<double> marginal_position(const NormalizedState& state, const std::vector<double>& xs1,
                                      const std::vector<double>& xs2, const MarginalOptions& options = {});

struct NormalizationOptions {
    /// Trapezoid nodes per axis over +/-(x0 + 8 delta) and +/-(p0 + 8 hbar/delta).
    std::size_t nodes = 73;
    /// Sum only the x1 <= 0 half (plus the x1 = 0 slab) and double it, using
    /// W(-z) = W(z) of the even compass state. Requires an odd node count.
    bool fold_parity = true;
};

/// Integral of the closed-form W over all four phase-space coordinates.
double normalization_integral(const NormalizedState& state, const NormalizationOptions& options = {});

struct WitnessOptions {
    /// Gauss-Legendre nodes per axis over +/-(|x0| + 10 delta).
    std::size_t nodes = 400;
};

/// Variance (Duan) test on the dimensionless quadratures u = x/delta and
/// v = p delta/hbar with unit scaling parameter: separable states satisfy
/// Var(u1 - u2) + Var(v1 + v2) >= 2 and Var(u1 + u2) + Var(v1 - v2) >= 2.
struct WitnessReport {
    double mean_x1 = 0.0;
    double mean_x2 = 0.0;
    double mean_p1 = 0.0;
    double mean_p2 = 0.0;
    double var_xminus = 0.0;
    double var_pplus = 0.0;
    double var_xplus = 0.0;
    double var_pminus = 0.0;
    double duan_value = 0.0;
    double duan_parameter = 1.0;
    double threshold = 2.0;
    bool separable_consistent = true;
    /// Weights after normalization, N A and N B.
    complex weight_a{};
    complex weight_b{};
};

WitnessReport variance_witness(const NormalizedState& state, const WitnessOptions& options = {});

} // namespace subplanck
