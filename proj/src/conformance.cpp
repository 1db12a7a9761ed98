#include "subplanck/conformance.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/parallel.hpp"
#include "subplanck/wigner_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace subplanck {

namespace {

struct Measured {
    double value;
    bool passed;
    std::string detail;
};

void record(ConformanceReport& report, std::string name, bool mandatory, double tolerance,
            const std::function<Measured()>& body) {
    CheckResult r;
    r.name = std::move(name);
    r.mandatory = mandatory;
    r.tolerance = tolerance;
    try {
        const Measured m = body();
        r.measured = m.value;
        r.passed = m.passed;
        r.detail = m.detail;
    } catch (const std::exception& e) {
        r.measured = std::nan("");
        r.passed = false;
        r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
}

Measured below(double value, double tolerance, std::string detail = {}) {
    return {value, std::isfinite(value) && value <= tolerance, std::move(detail)};
}

PhasePoint negate(const PhasePoint& p) { return {-p.x1, -p.p1, -p.x2, -p.p2}; }

StateParams with_weights(StateParams p, complex a, complex b) {
    p.A = a;
    p.B = b;
    return p;
}

SectionSpec lattice_section(Plane plane, const StateParams& p) {
    SectionSpec spec;
    spec.plane = plane;
    const auto axes = plane_axes(plane);
    const double r1 = 4.0 * predicted_period(axes[0], p);
    const double r2 = 4.0 * predicted_period(axes[1], p);
    spec.range1 = {-r1, r1};
    spec.range2 = {-r2, r2};
    return spec;
}

} // namespace

bool ConformanceReport::mandatory_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.mandatory || c.passed; });
}

std::vector<PhasePoint> random_phase_points(const StateParams& params, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double xr = std::abs(params.x0) + 2.0 * params.delta;
    const double pr = std::abs(params.p0) + 2.0 * params.hbar / params.delta;
    std::uniform_real_distribution<double> ux(-xr, xr);
    std::uniform_real_distribution<double> up(-pr, pr);
    std::vector<PhasePoint> pts(count);
    for (auto& pt : pts) {
        pt.x1 = ux(rng);
        pt.p1 = up(rng);
        pt.x2 = ux(rng);
        pt.p2 = up(rng);
    }
    return pts;
}

ConformanceReport run_conformance(const NormalizedState& state, const ConformanceOptions& options) {
    ConformanceReport report;
    const StateParams& p = state.params();
    const auto pts = random_phase_points(p, options.oracle_points, options.seed);

    std::vector<double> analytic(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { analytic[i] = wigner_value(pts[i], state); });
    double peak = std::abs(wigner_value(PhasePoint{}, state));
    for (double w : analytic) peak = std::max(peak, std::abs(w));

    std::vector<OracleValue> oracle;
    record(report, "oracle_equivalence", true, 1e-6, [&] {
        QuadratureSpec q = options.quad;
        q.max_momentum = std::max(q.max_momentum, std::abs(p.p0));
        const TwoModeWavefunction psi = as_two_mode(state);
        oracle.assign(pts.size(), OracleValue{});
        parallel_for(pts.size(), [&](std::size_t i) { oracle[i] = wigner_numeric_2mode(pts[i], psi, p.hbar, q); });
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) worst = std::max(worst, std::abs(analytic[i] - oracle[i].value));
        std::ostringstream os;
        os << pts.size() << " random points, peak |W| " << peak;
        return below(worst / peak, 1e-6, os.str());
    });
    record(report, "oracle_reality", true, kOracleImagTolerance, [&] {
        if (oracle.size() != pts.size()) throw ResolutionError("oracle values unavailable");
        double worst = 0.0;
        bool truncated = false;
        for (const auto& o : oracle) {
            worst = std::max(worst, std::abs(o.imag_residual));
            truncated = truncated || o.truncated;
        }
        return below(worst, kOracleImagTolerance, truncated ? "shift window truncates the integrand" : "");
    });
    record(report, "oracle_convergence", true, 1e-8, [&] {
        QuadratureSpec q = options.quad;
        q.max_momentum = std::max(q.max_momentum, std::abs(p.p0));
        const std::size_t n = std::min<std::size_t>(8, pts.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(wigner_numeric_2mode(pts[i], state, q) -
                                             wigner_numeric_2mode(pts[i], state, q.refined())));
        }
        return below(worst, 1e-8, "node doubling at " + std::to_string(n) + " points");
    });
    record(report, "printed_diagonal_terms", false, 1e-6, [&] {
        if (oracle.size() != pts.size()) throw ResolutionError("oracle values unavailable");
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto w = wigner_assemble(pts[i], state, Transcription::Printed);
            const auto c = wigner_assemble(pts[i], state, Transcription::Corrected);
            const double printed = w.envelope * (w.wd1 + w.wd2 + c.cross_damping * (c.wc1 + c.wc2).real());
            worst = std::max(worst, std::abs(printed - oracle[i].value));
        }
        return below(worst / peak, 1e-6, "diagonal components as printed, off-diagonal corrected; relative to peak");
    });
    record(report, "printed_offdiagonal_weights", false, kRealityTolerance, [&] {
        double worst = 0.0;
        for (const auto& pt : pts) {
            const auto w = wigner_assemble(pt, state, Transcription::Printed);
            worst = std::max(worst, std::abs((w.wc1 + w.wc2).imag()) / (std::abs(w.wc1) + std::abs(w.wc2) + 1.0));
        }
        return below(worst, kRealityTolerance, "relative imaginary part of the printed off-diagonal pair");
    });

    const double bound = 1.0 / (std::numbers::pi * p.hbar * std::numbers::pi * p.hbar);
    record(report, "wigner_bound", true, bound + 1e-9, [&] {
        const Grid2D g = section(SectionSpec{}, state);
        double worst = peak;
        for (double w : g.values) worst = std::max(worst, std::abs(w));
        return below(worst, bound + 1e-9, "max |W| over random points and the default section");
    });
    record(report, "parity_symmetry", true, 1e-12, [&] {
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            worst = std::max(worst, std::abs(analytic[i] - wigner_value(negate(pts[i]), state)));
        }
        return below(worst / peak, 1e-12, "W(-z) vs W(z), relative to peak");
    });
    record(report, "exchange_symmetry", true, 1e-12, [&] {
        const NormalizedState swapped(with_weights(p, p.B, p.A));
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const PhasePoint& z = pts[i];
            worst = std::max(worst, std::abs(analytic[i] - wigner_value({z.x2, z.p2, z.x1, z.p1}, swapped)));
        }
        return below(worst / peak, 1e-12, "W_{A,B}(x1,p1,x2,p2) vs W_{B,A}(x2,p2,x1,p1)");
    });
    record(report, "position_marginal", true, 1e-5, [&] {
        const double r = std::abs(p.x0) + 2.0 * p.delta;
        std::vector<double> xs(11);
        for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -r + 2.0 * r * static_cast<double>(i) / 10.0;
        const auto m = marginal_position(state, xs, xs);
        double worst = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            for (std::size_t i = 0; i < xs.size(); ++i) {
                worst = std::max(worst, std::abs(m[j * xs.size() + i] - std::norm(bipartite_state(xs[i], xs[j], state))));
            }
        }
        return below(worst, 1e-5, "11x11 grid");
    });
    if (options.run_normalization) {
        record(report, "normalization", true, 1e-3, [&] {
            const double total = normalization_integral(state, options.normalization);
            std::ostringstream os;
            os << "integral " << total << " with " << options.normalization.nodes << " trapezoid nodes per axis";
            return below(std::abs(total - 1.0), 1e-3, os.str());
        });
    }

    record(report, "tile_area", true, 0.05, [&] {
        SectionSpec spec = lattice_section(Plane::X1P1, p);
        spec.n1 = spec.n2 = options.section_resolution;
        const NormalizedState fig(with_weights(p, StateParams{}.A, StateParams{}.B));
        const TileReport t = find_zero_lattice(section(spec, fig), p);
        std::ostringstream os;
        os << "tile " << t.tile_area << " vs predicted " << t.predicted_area << " (equal-magnitude weights)";
        return below(t.relative_error, 0.05, os.str());
    });
    record(report, "checkerboard_gating", true, 0.0, [&] {
        const NormalizedState both(with_weights(p, StateParams{}.A, StateParams{}.B));
        const NormalizedState only_a(with_weights(p, StateParams{}.A, complex{}));
        auto detect = [&](const NormalizedState& s, Plane plane) {
            SectionSpec spec = lattice_section(plane, p);
            spec.n1 = spec.n2 = options.section_resolution;
            return checkerboard_detect(section(spec, s), p).detected;
        };
        const bool x1p1_both = detect(both, Plane::X1P1);
        const bool x1p1_a = detect(only_a, Plane::X1P1);
        const bool mixed_a = detect(only_a, Plane::X2P1);
        const int misses = int(!x1p1_both) + int(x1p1_a) + int(!mixed_a);
        std::ostringstream os;
        os << std::boolalpha << "X1P1 both weights: " << x1p1_both << ", X1P1 B=0: " << x1p1_a
           << ", X2P1 B=0: " << mixed_a;
        return Measured{double(misses), misses == 0, os.str()};
    });

    const double s_star = std::numbers::pi * p.hbar / (4.0 * std::abs(p.x0));
    OverlapCurve entangled;
    OverlapCurve compass;
    record(report, "sensitivity_minima", true, 1e-4, [&] {
        const double s_max = 2.0 * std::numbers::pi * p.hbar / (2.0 * std::abs(p.x0));
        entangled = sweep_overlap(OverlapModel::NumericGeneral, state, s_max);
        compass = sweep_overlap(OverlapModel::NumericCompass, state, s_max);
        const double a = find_minimum_shift(entangled);
        const double b = find_minimum_shift(compass);
        std::ostringstream os;
        os << "s* " << a << ", s1* " << b << ", ratio " << a / b;
        return below(std::max(std::abs(a - s_star), std::abs(b - 2.0 * s_star)), 1e-4, os.str());
    });
    record(report, "sensitivity_ratio", true, 1e-3, [&] {
        const double ratio = find_minimum_shift(entangled) / find_minimum_shift(compass);
        return below(std::abs(ratio - 0.5), 1e-3, "ratio " + std::to_string(ratio));
    });
    record(report, "orthogonality_at_s_star", true, 1e-6, [&] {
        return below(equal_shift_overlap_numeric(state, s_star), 1e-6, "equal momentum kick s = pi hbar/(4 x0)");
    });
    record(report, "equal_shift_shape", false, 1e-4, [&] {
        if (entangled.shifts.empty()) throw NoBracketError("entangled sweep unavailable");
        double worst = 0.0;
        const double period = overlap_period(OverlapModel::NumericGeneral, p);
        for (std::size_t i = 0; i < entangled.shifts.size() && entangled.shifts[i] <= period + 1e-12; ++i) {
            worst = std::max(worst, std::abs(entangled.overlaps[i] - equal_shift_overlap(state, entangled.shifts[i])));
        }
        return below(worst, 1e-4, "closed form (1 + cos 4 x0 s)/2 vs quadrature over one period");
    });
    record(report, "compass_shape", false, 1e-3, [&] {
        if (compass.shifts.empty()) throw NoBracketError("compass sweep unavailable");
        double worst = 0.0;
        for (std::size_t i = 0; i < compass.shifts.size(); ++i) {
            worst = std::max(worst, std::abs(compass.overlaps[i] - compass_overlap_normalized(compass.shifts[i], p.x0)));
        }
        return below(worst, 1e-3, "normalized printed compass form vs quadrature");
    });
    record(report, "printed_general_overlap", false, 1e-4, [&] {
        if (entangled.shifts.empty()) throw NoBracketError("entangled sweep unavailable");
        const double ref = overlap_printed(state, {});
        double worst = 0.0;
        for (std::size_t i = 0; i < entangled.shifts.size(); ++i) {
            const complex s{0.0, entangled.shifts[i]};
            worst = std::max(worst, std::abs(overlap_printed(state, {s, s}) / ref - entangled.overlaps[i]));
        }
        return below(worst, 1e-4, "printed general overlap at equal shift, normalized, vs quadrature");
    });

    record(report, "witness_first_moments", true, 1e-10, [&] {
        const WitnessReport w = variance_witness(state);
        const double worst = std::max({std::abs(w.mean_x1), std::abs(w.mean_x2), std::abs(w.mean_p1),
                                       std::abs(w.mean_p2)});
        std::ostringstream os;
        os << "duan value " << w.duan_value << " vs threshold " << w.threshold;
        return below(worst, 1e-10, os.str());
    });
    return report;
}

} // namespace subplanck
