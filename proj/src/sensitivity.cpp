#include "subplanck/sensitivity.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/parallel.hpp"
#include "subplanck/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace subplanck {

namespace {

constexpr double kRangeSlack = 1e-9;

complex inner(const Wavefunction& f, const Wavefunction& g, const Rule1D& rule) {
    return rule.integrate([&](double x) { return std::conj(f(x)) * g(x); });
}

Rule1D overlap_rule(const StateParams& p, double position_shift, double momentum_kick,
                    const OverlapQuadrature& quad) {
    const double half = std::abs(p.x0) + 10.0 * p.delta + std::abs(position_shift);
    const double k = 2.0 * std::abs(p.p0) + std::abs(momentum_kick);
    const auto need = static_cast<std::size_t>(std::ceil(8.0 * half * k / (std::numbers::pi * p.hbar)));
    if (quad.nodes < 16 || quad.nodes < need) {
        throw ResolutionError("overlap quadrature with " + std::to_string(quad.nodes) +
                              " nodes cannot resolve the displaced state; need " +
                              std::to_string(std::max<std::size_t>(need, 16)));
    }
    return gauss_legendre(quad.nodes, -half, half);
}

double checked_probability(double value) {
    if (!std::isfinite(value) || value < -kRangeSlack || value > 1.0 + kRangeSlack) {
        throw ResolutionError("overlap " + std::to_string(value) + " outside [0, 1]; quadrature failed");
    }
    return std::clamp(value, 0.0, 1.0);
}

} // namespace

double overlap_displaced_numeric(const NormalizedState& state, const Displacement& d,
                                 const OverlapQuadrature& quad) {
    const auto& p = state.params();
    const PhaseShift sa = phase_shift(d.alpha, p);
    const PhaseShift sb = phase_shift(d.beta, p);
    const Rule1D rule = overlap_rule(p, std::max(std::abs(sa.position), std::abs(sb.position)),
                                     std::max(std::abs(sa.momentum), std::abs(sb.momentum)), quad);

    const TwoModeWavefunction psi = as_two_mode(state);
    const TwoModeWavefunction moved = psi.displaced(d, p);
    const auto t = psi.terms();
    const auto u = moved.terms();
    complex amp{};
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            amp += std::conj(t[i].weight) * u[j].weight * inner(t[i].mode1, u[j].mode1, rule) *
                   inner(t[i].mode2, u[j].mode2, rule);
        }
    }
    return checked_probability(std::norm(amp));
}

double equal_shift_overlap_numeric(const NormalizedState& state, double s, const OverlapQuadrature& quad) {
    const complex shift{0.0, s};
    return overlap_displaced_numeric(state, {shift, shift}, quad);
}

double equal_shift_overlap(const NormalizedState& state, double s) {
    return 0.5 * (1.0 + std::cos(4.0 * state.params().x0 * s / state.params().hbar));
}

double equal_shift_overlap_printed(const NormalizedState& state, double s) {
    const double n2 = state.norm_const() * state.norm_const();
    return 8.0 * n2 * n2 * (1.0 + std::cos(4.0 * state.params().x0 * s / state.params().hbar));
}

double compass_overlap(double s1, double x0) {
    return 0.25 * (3.0 + 4.0 * std::cos(2.0 * x0 * s1) + std::cos(4.0 * x0 * s1));
}

double compass_overlap_normalized(double s1, double x0) { return compass_overlap(s1, x0) / compass_overlap(0.0, x0); }

double compass_overlap_numeric(const StateParams& params, double s1, const OverlapQuadrature& quad) {
    params.validate();
    const StateParams p = params;
    const Wavefunction chi = [p](double x) {
        return complex{even_position_state(x, p) + even_momentum_state(x, p), 0.0};
    };
    const complex shift{0.0, s1};
    const PhaseShift sh = phase_shift(shift, p);
    const Rule1D rule = overlap_rule(p, sh.position, sh.momentum, quad);
    const double norm = inner(chi, chi, rule).real();
    const complex amp = inner(chi, displace(chi, shift, p), rule);
    return checked_probability(std::norm(amp) / (norm * norm));
}

double overlap_printed(const NormalizedState& state, const Displacement& d) {
    const auto& p = state.params();
    const complex c = std::cos(p.x0 * (d.beta + std::conj(d.beta))) * std::cosh(p.x0 * (std::conj(d.alpha) - d.alpha));
    const double c2 = std::norm(c);
    const double a = std::abs(p.A);
    const double b = std::abs(p.B);
    const double n2 = state.norm_const() * state.norm_const();
    return 16.0 * n2 * n2 * ((a * a * a * a + b * b * b * b) * c2 + 2.0 * a * b * c2);
}

std::string_view to_string(OverlapModel model) {
    switch (model) {
    case OverlapModel::EntangledEqualShift: return "entangled";
    case OverlapModel::ZurekCompass: return "compass";
    case OverlapModel::NumericGeneral: return "numeric";
    case OverlapModel::NumericCompass: return "numeric-compass";
    }
    return "unknown";
}

double overlap_period(OverlapModel model, const StateParams& params) {
    const double base = std::numbers::pi * params.hbar / std::abs(params.x0);
    switch (model) {
    case OverlapModel::EntangledEqualShift:
    case OverlapModel::NumericGeneral: return 0.5 * base;
    case OverlapModel::ZurekCompass:
    case OverlapModel::NumericCompass: return base;
    }
    return base;
}

double overlap_value(OverlapModel model, const NormalizedState& state, double s, const OverlapQuadrature& quad) {
    switch (model) {
    case OverlapModel::EntangledEqualShift: return equal_shift_overlap(state, s);
    case OverlapModel::ZurekCompass: return compass_overlap_normalized(s, state.params().x0);
    case OverlapModel::NumericGeneral: return equal_shift_overlap_numeric(state, s, quad);
    case OverlapModel::NumericCompass: return compass_overlap_numeric(state.params(), s, quad);
    }
    return 0.0;
}

OverlapCurve sweep_overlap(OverlapModel model, const NormalizedState& state, double s_max,
                           std::size_t samples_per_period, const OverlapQuadrature& quad) {
    if (!(s_max > 0.0) || !std::isfinite(s_max)) throw InvalidArgument("sweep range must be positive and finite");
    if (samples_per_period < 4) throw InvalidArgument("need at least 4 samples per period");
    if (state.params().x0 == 0.0) throw InvalidArgument("overlap sweep needs x0 != 0");
    const double h = overlap_period(model, state.params()) / static_cast<double>(samples_per_period);
    const auto count = static_cast<std::size_t>(std::floor(s_max / h + 1e-9)) + 1;

    OverlapCurve curve;
    curve.model = model;
    curve.shifts.resize(count);
    curve.overlaps.resize(count);
    for (std::size_t i = 0; i < count; ++i) curve.shifts[i] = h * static_cast<double>(i);
    parallel_for(count, [&](std::size_t i) { curve.overlaps[i] = overlap_value(model, state, curve.shifts[i], quad); });
    curve.minima = find_minima(curve.shifts, curve.overlaps);
    return curve;
}

std::vector<double> find_minima(const std::vector<double>& shifts, const std::vector<double>& overlaps) {
    std::vector<double> out;
    const std::size_t n = std::min(shifts.size(), overlaps.size());
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double ym = overlaps[i - 1];
        const double y0 = overlaps[i];
        const double yp = overlaps[i + 1];
        if (!(y0 < ym && y0 <= yp)) continue;
        const double curvature = ym - 2.0 * y0 + yp;
        double s = shifts[i];
        if (curvature > 0.0) {
            const double offset = 0.5 * (ym - yp) / curvature;
            s += offset * 0.5 * (shifts[i + 1] - shifts[i - 1]);
        }
        out.push_back(s);
    }
    return out;
}

double find_minimum_shift(const OverlapCurve& curve) {
    const auto minima = curve.minima.empty() ? find_minima(curve.shifts, curve.overlaps) : curve.minima;
    if (minima.empty()) throw NoBracketError("overlap curve has no interior minimum");
    return minima.front();
}

} // namespace subplanck
