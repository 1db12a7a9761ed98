#include "subplanck/analysis.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/parallel.hpp"
#include "subplanck/quadrature.hpp"
#include "subplanck/wigner_analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace subplanck {

namespace {

// Best scan line parallel to one axis of a grid.
struct ScanLine {
    std::vector<double> zeros;
    double position = 0.0;
};

double centre(const std::vector<double>& axis) { return 0.5 * (axis.front() + axis.back()); }

double spacing_spread(const std::vector<double>& zeros) {
    if (zeros.size() < 3) return std::numeric_limits<double>::infinity();
    std::vector<double> gaps(zeros.size() - 1);
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) gaps[i] = zeros[i + 1] - zeros[i];
    const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
    double var = 0.0;
    for (double g : gaps) var += (g - mean) * (g - mean);
    return std::sqrt(var / static_cast<double>(gaps.size())) / mean;
}

// along_first: the line runs parallel to axis 1 (zeros are axis-1 values).
ScanLine best_line(const Grid2D& grid, bool along_first, double period_along, double period_across,
                   double window_periods) {
    const auto& along = along_first ? grid.axis1 : grid.axis2;
    const auto& across = along_first ? grid.axis2 : grid.axis1;
    const double c_along = centre(along);
    const double c_across = centre(across);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < along.size(); ++i) {
        if (std::abs(along[i] - c_along) <= window_periods * period_along) keep.push_back(i);
    }

    ScanLine best;
    bool have = false;
    double best_spread = std::numeric_limits<double>::infinity();
    std::vector<double> xs(keep.size());
    std::vector<double> ys(keep.size());
    for (std::size_t j = 0; j < across.size(); ++j) {
        if (std::abs(across[j] - c_across) > 0.5 * period_across) continue;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            xs[k] = along[keep[k]];
            ys[k] = along_first ? grid.at(keep[k], j) : grid.at(j, keep[k]);
        }
        auto zeros = sign_changes(xs, ys);
        const double spread = spacing_spread(zeros);
        bool better = !have;
        if (have) {
            if (zeros.size() != best.zeros.size()) {
                better = zeros.size() > best.zeros.size();
            } else if (std::abs(spread - best_spread) > 1e-9) {
                better = spread < best_spread;
            } else {
                better = std::abs(across[j] - c_across) < std::abs(best.position - c_across);
            }
        }
        if (better) {
            best.zeros = std::move(zeros);
            best.position = across[j];
            best_spread = spread;
            have = true;
        }
    }
    return best;
}

double median_period(const std::vector<double>& zeros) {
    std::vector<double> periods;
    for (std::size_t i = 0; i + 2 < zeros.size(); ++i) periods.push_back(zeros[i + 2] - zeros[i]);
    const auto mid = periods.begin() + static_cast<std::ptrdiff_t>(periods.size() / 2);
    std::nth_element(periods.begin(), mid, periods.end());
    if (periods.size() % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(periods.begin(), mid);
    return 0.5 * (lower + upper);
}

bool grid_usable(const Grid2D& grid) {
    return grid.axis1.size() >= 2 && grid.axis2.size() >= 2 &&
           grid.values.size() == grid.axis1.size() * grid.axis2.size();
}

} // namespace

double predicted_period(Coord axis, const StateParams& params) {
    const double scale = is_momentum(axis) ? params.x0 : params.p0;
    if (scale == 0.0) throw InvalidArgument("no interference lattice when the cat separation vanishes");
    return std::numbers::pi * params.hbar / std::abs(scale);
}

double predicted_tile_area(const StateParams& params) {
    const double h = 2.0 * std::numbers::pi * params.hbar;
    return h * h / (4.0 * std::abs(params.x0 * params.p0));
}

std::vector<double> sign_changes(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> zeros;
    const std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = ys[i];
        const double b = ys[i + 1];
        if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)) {
            zeros.push_back(xs[i] + (xs[i + 1] - xs[i]) * a / (a - b));
        } else if (b == 0.0 && i + 2 < n && ((a < 0.0 && ys[i + 2] > 0.0) || (a > 0.0 && ys[i + 2] < 0.0))) {
            zeros.push_back(xs[i + 1]);
        }
    }
    return zeros;
}

TileReport find_zero_lattice(const Grid2D& grid, const StateParams& params, const LatticeOptions& options) {
    if (!grid_usable(grid)) throw InvalidArgument("find_zero_lattice: malformed grid");
    const auto axes = plane_axes(grid.spec.plane);
    const double t1 = predicted_period(axes[0], params);
    const double t2 = predicted_period(axes[1], params);

    const ScanLine l1 = best_line(grid, true, t1, t2, options.window_periods);
    const ScanLine l2 = best_line(grid, false, t2, t1, options.window_periods);
    const std::size_t need = std::max<std::size_t>(options.min_sign_changes, 3);
    if (l1.zeros.size() < need || l2.zeros.size() < need) {
        throw NoLatticeError("no zero lattice in " + std::string(to_string(grid.spec.plane)) + " section: " +
                             std::to_string(l1.zeros.size()) + " sign changes along axis 1, " +
                             std::to_string(l2.zeros.size()) + " along axis 2");
    }

    TileReport r;
    r.zeros_axis1 = l1.zeros;
    r.zeros_axis2 = l2.zeros;
    r.line1 = l1.position;
    r.line2 = l2.position;
    r.period1 = median_period(l1.zeros);
    r.period2 = median_period(l2.zeros);
    r.tile_area = r.period1 * r.period2;
    r.predicted_area = predicted_tile_area(params);
    r.relative_error = std::abs(r.tile_area - r.predicted_area) / r.predicted_area;
    return r;
}

CheckerboardResult checkerboard_detect(const Grid2D& grid, const StateParams& params,
                                       const CheckerboardOptions& options) {
    CheckerboardResult out;
    if (!grid_usable(grid)) return out;
    const auto axes = plane_axes(grid.spec.plane);
    double t1 = 0.0;
    double t2 = 0.0;
    try {
        t1 = predicted_period(axes[0], params);
        t2 = predicted_period(axes[1], params);
    } catch (const InvalidArgument&) {
        return out;
    }

    out.sign_changes_axis1 = best_line(grid, true, t1, t2, options.window_periods).zeros.size();
    out.sign_changes_axis2 = best_line(grid, false, t2, t1, options.window_periods).zeros.size();

    const double c1 = centre(grid.axis1);
    const double c2 = centre(grid.axis2);
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid.axis2.size(); ++j) {
        if (std::abs(grid.axis2[j] - c2) > options.window_periods * t2) continue;
        for (std::size_t i = 0; i < grid.axis1.size(); ++i) {
            if (std::abs(grid.axis1[i] - c1) > options.window_periods * t1) continue;
            hi = std::max(hi, grid.at(i, j));
            lo = std::min(lo, grid.at(i, j));
        }
    }
    const double scale = std::abs(hi) + std::abs(lo);
    if (!(scale > 0.0) || !std::isfinite(scale)) return out;
    out.contrast = (hi - lo) / scale;
    out.detected = out.sign_changes_axis1 >= 2 && out.sign_changes_axis2 >= 2 &&
                   out.contrast > options.contrast_threshold;
    return out;
}

std::vector<double> marginal_position(const NormalizedState& state, const std::vector<double>& xs1,
                                      const std::vector<double>& xs2, const MarginalOptions& options) {
    const auto& p = state.params();
    const double pmax = std::abs(p.p0) + 8.0 * p.hbar / p.delta;
    const Rule1D rule = trapezoid(options.nodes, -pmax, pmax);
    std::vector<double> out(xs1.size() * xs2.size());
    parallel_for(out.size(), [&](std::size_t k) {
        PhasePoint pt;
        pt.x1 = xs1[k % xs1.size()];
        pt.x2 = xs2[k / xs1.size()];
        double sum = 0.0;
        for (std::size_t a = 0; a < rule.size(); ++a) {
            pt.p1 = rule.nodes[a];
            double inner = 0.0;
            for (std::size_t b = 0; b < rule.size(); ++b) {
                pt.p2 = rule.nodes[b];
                inner += rule.weights[b] * wigner_value(pt, state);
            }
            sum += rule.weights[a] * inner;
        }
        out[k] = sum;
    });
    return out;
}

double normalization_integral(const NormalizedState& state, const NormalizationOptions& options) {
    const auto& p = state.params();
    const double xmax = std::abs(p.x0) + 8.0 * p.delta;
    const double pmax = std::abs(p.p0) + 8.0 * p.hbar / p.delta;
    const Rule1D rx = trapezoid(options.nodes, -xmax, xmax);
    const Rule1D rp = trapezoid(options.nodes, -pmax, pmax);
    const std::size_t n = options.nodes;

    // With an odd node count the rules are symmetric about zero, so slab i
    // and slab n-1-i carry equal weight under z -> -z.
    const bool fold = options.fold_parity && n % 2 == 1;
    const std::size_t slab_count = fold ? n / 2 + 1 : n;
    std::vector<double> slabs(slab_count, 0.0);
    parallel_for(slab_count, [&](std::size_t i) {
        PhasePoint pt;
        pt.x1 = rx.nodes[i];
        double s1 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            pt.p1 = rp.nodes[j];
            double s2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                pt.x2 = rx.nodes[k];
                double s3 = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    pt.p2 = rp.nodes[l];
                    s3 += rp.weights[l] * wigner_value(pt, state);
                }
                s2 += rx.weights[k] * s3;
            }
            s1 += rp.weights[j] * s2;
        }
        const double multiplicity = (fold && i != n / 2) ? 2.0 : 1.0;
        slabs[i] = multiplicity * rx.weights[i] * s1;
    });
    return std::accumulate(slabs.begin(), slabs.end(), 0.0);
}

WitnessReport variance_witness(const NormalizedState& state, const WitnessOptions& options) {
    const auto& p = state.params();
    const double half = std::abs(p.x0) + 10.0 * p.delta;
    const Rule1D rule = gauss_legendre(options.nodes, -half, half);
    const std::size_t n = rule.size();

    std::vector<double> psi(n), phi(n), dpsi(n), dphi(n);
    for (std::size_t i = 0; i < n; ++i) {
        psi[i] = even_position_state(rule.nodes[i], p);
        phi[i] = even_momentum_state(rule.nodes[i], p);
        dpsi[i] = even_position_state_derivative(rule.nodes[i], p);
        dphi[i] = even_momentum_state_derivative(rule.nodes[i], p);
    }
    const complex wa = state.weight_a();
    const complex wb = state.weight_b();

    // Per-row partial sums: x1, x1^2, x2, x2^2, x1 x2, Im Psi* d1Psi, |d1Psi|^2,
    // Im Psi* d2Psi, |d2Psi|^2, Re (d1Psi)* d2Psi.
    constexpr std::size_t kMoments = 10;
    std::vector<std::array<double, kMoments>> rows(n);
    parallel_for(n, [&](std::size_t i) {
        std::array<double, kMoments> m{};
        const double x1 = rule.nodes[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double x2 = rule.nodes[j];
            const double w = rule.weights[j];
            const complex v = wa * (psi[i] * phi[j]) + wb * (phi[i] * psi[j]);
            const complex d1 = wa * (dpsi[i] * phi[j]) + wb * (dphi[i] * psi[j]);
            const complex d2 = wa * (psi[i] * dphi[j]) + wb * (phi[i] * dpsi[j]);
            const double rho = std::norm(v);
            m[0] += w * x1 * rho;
            m[1] += w * x1 * x1 * rho;
            m[2] += w * x2 * rho;
            m[3] += w * x2 * x2 * rho;
            m[4] += w * x1 * x2 * rho;
            m[5] += w * (std::conj(v) * d1).imag();
            m[6] += w * std::norm(d1);
            m[7] += w * (std::conj(v) * d2).imag();
            m[8] += w * std::norm(d2);
            m[9] += w * (std::conj(d1) * d2).real();
        }
        for (auto& x : m) x *= rule.weights[i];
        rows[i] = m;
    });
    std::array<double, kMoments> m{};
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < kMoments; ++k) m[k] += r[k];
    }

    const double d = p.delta;
    const double h = p.hbar;
    const double sx = 1.0 / d;   // u = x / delta
    const double sp = d / h;     // v = p delta / hbar
    WitnessReport r;
    r.mean_x1 = m[0];
    r.mean_x2 = m[2];
    r.mean_p1 = h * m[5];
    r.mean_p2 = h * m[7];
    const double var_x1 = m[1] - m[0] * m[0];
    const double var_x2 = m[3] - m[2] * m[2];
    const double cov_x = m[4] - m[0] * m[2];
    const double var_p1 = h * h * m[6] - r.mean_p1 * r.mean_p1;
    const double var_p2 = h * h * m[8] - r.mean_p2 * r.mean_p2;
    const double cov_p = h * h * m[9] - r.mean_p1 * r.mean_p2;

    r.var_xminus = sx * sx * (var_x1 + var_x2 - 2.0 * cov_x);
    r.var_xplus = sx * sx * (var_x1 + var_x2 + 2.0 * cov_x);
    r.var_pplus = sp * sp * (var_p1 + var_p2 + 2.0 * cov_p);
    r.var_pminus = sp * sp * (var_p1 + var_p2 - 2.0 * cov_p);
    r.duan_value = std::min(r.var_xminus + r.var_pplus, r.var_xplus + r.var_pminus);
    r.separable_consistent = r.duan_value >= r.threshold;
    r.weight_a = wa;
    r.weight_b = wb;
    return r;
}

} // namespace subplanck
