#include "subplanck/wigner_analytic.hpp"

#include "subplanck/errors.hpp"

#include <cmath>
#include <numbers>

namespace subplanck {

namespace {

constexpr complex I{0.0, 1.0};

// Weight factors of the off-diagonal pair. With R = A1B1 + A2B2 = Re(A*B) and
// Im = A1B2 - A2B1 = Im(A*B).
complex c1_weight(const StateParams& p, Transcription form) {
    const complex ab = std::conj(p.A) * p.B;
    return form == Transcription::Printed ? complex{ab.real() - ab.imag(), 0.0} : ab;
}

complex c2_weight(const StateParams& p, Transcription form) {
    const complex ab = std::conj(p.A) * p.B;
    return form == Transcription::Printed ? complex{ab.real() + ab.imag(), 0.0} : std::conj(ab);
}

// Six-term bracket shared by both off-diagonal components; sign = +1 gives
// the first component's arguments, -1 the second's.
complex bracket(double s, double d, double ps, double pd, const StateParams& p, double sign) {
    const double x0 = p.x0;
    const double p0 = p.p0;
    const double d2 = p.delta * p.delta;
    const double h = p.hbar;
    const double h2 = h * h;

    const complex k_minus{x0 / d2, -p0 / h};
    const complex l_minus{-p0 * d2 / h2, x0 / h};
    const complex k_plus{x0 / d2, p0 / h};
    const complex l_plus{p0 * d2 / h2, x0 / h};
    const complex phase = std::polar(1.0, p0 * x0 / h);

    const complex hyperbolic =
        phase * (std::cosh(k_minus * s + sign * l_minus * pd) + std::cosh(k_minus * d + sign * l_minus * ps)) +
        std::conj(phase) * (std::cosh(k_plus * s + sign * l_plus * pd) + std::cosh(k_plus * d + sign * l_plus * ps));

    const complex mixed =
        std::cos(p0 * (d / h - sign * I * ps * d2 / h2)) * std::cosh(x0 * (s / d2 + sign * I * pd / h)) +
        std::cos(p0 * (s / h - sign * I * pd * d2 / h2)) * std::cosh(x0 * (d / d2 + sign * I * ps / h));

    return hyperbolic + 2.0 * mixed;
}

// Four-term diagonal structure; (x_a, p_a) carry the position-cat factors,
// (x_b, p_b) the momentum-cat factors.
double diagonal(double x_a, double p_a, double x_b, double p_b, const StateParams& p, Transcription form) {
    const double d2 = p.delta * p.delta;
    const double h = p.hbar;
    const double ex = p.position_cat_overlap();
    const double ep = p.momentum_cat_overlap();
    const double cosh_x = std::cosh(2.0 * p.x0 * x_a / d2);
    const double cosh_p = std::cosh(2.0 * p.p0 * p_b * d2 / (h * h));
    const double cos_x = std::cos(2.0 * p.p0 * x_b / h);
    const double cos_p = std::cos(2.0 * p.x0 * p_a / h);
    const double interference = form == Transcription::Printed ? 2.0 : 1.0;
    return 2.0 * (ex * ep * cosh_p * cosh_x + ex * cosh_x * cos_x + ep * cos_p * cosh_p +
                  interference * cos_x * cos_p);
}

} // namespace

double component_d1(const PhasePoint& pt, const NormalizedState& state, Transcription form) {
    const auto& p = state.params();
    return std::norm(p.A) * diagonal(pt.x1, pt.p1, pt.x2, pt.p2, p, form);
}

double component_d2(const PhasePoint& pt, const NormalizedState& state, Transcription form) {
    const auto& p = state.params();
    return std::norm(p.B) * diagonal(pt.x2, pt.p2, pt.x1, pt.p1, p, form);
}

complex component_c1_epr(double x_sum, double x_diff, double p_sum, double p_diff, const NormalizedState& state,
                         Transcription form) {
    const auto& p = state.params();
    return c1_weight(p, form) * bracket(x_sum, x_diff, p_sum, p_diff, p, +1.0);
}

complex component_c1(const PhasePoint& pt, const NormalizedState& state, Transcription form) {
    return component_c1_epr(pt.x1 + pt.x2, pt.x1 - pt.x2, pt.p1 + pt.p2, pt.p1 - pt.p2, state, form);
}

complex component_c2(const PhasePoint& pt, const NormalizedState& state, Transcription form) {
    const auto& p = state.params();
    return c2_weight(p, form) * bracket(pt.x1 + pt.x2, pt.x1 - pt.x2, pt.p1 + pt.p2, pt.p1 - pt.p2, p, -1.0);
}

double envelope(const PhasePoint& pt, const NormalizedState& state) {
    const auto& p = state.params();
    const double d2 = p.delta * p.delta;
    const double h2 = p.hbar * p.hbar;
    const double gaussian =
        std::exp(-(pt.x1 * pt.x1 + pt.x2 * pt.x2) / d2 - (pt.p1 * pt.p1 + pt.p2 * pt.p2) * d2 / h2);
    const double n2 = state.norm_const() * state.norm_const();
    return n2 * gaussian /
           (2.0 * std::numbers::pi * std::numbers::pi * h2 * (1.0 + p.position_cat_overlap()) *
            (1.0 + p.momentum_cat_overlap()));
}

double cross_damping(const StateParams& p) {
    const double d2 = p.delta * p.delta;
    return std::exp(-p.x0 * p.x0 / (2.0 * d2) - p.p0 * p.p0 * d2 / (2.0 * p.hbar * p.hbar));
}

WignerDecomposition wigner_assemble(const PhasePoint& pt, const NormalizedState& state, Transcription form) {
    WignerDecomposition w;
    w.envelope = envelope(pt, state);
    w.cross_damping = cross_damping(state.params());
    w.wd1 = component_d1(pt, state, form);
    w.wd2 = component_d2(pt, state, form);
    const bool entangled = std::abs(state.params().A) > 0.0 && std::abs(state.params().B) > 0.0;
    if (entangled) {
        w.wc1 = component_c1(pt, state, form);
        w.wc2 = component_c2(pt, state, form);
    }
    // Far outside the support the Gaussian underflows before the hyperbolic
    // factors overflow; the limit is exactly zero.
    if (w.envelope == 0.0) {
        w.total = 0.0;
        return w;
    }
    w.total = w.envelope * (w.wd1 + w.wd2 + w.cross_damping * (w.wc1 + w.wc2).real());
    return w;
}

WignerDecomposition wigner_total(const PhasePoint& pt, const NormalizedState& state) {
    WignerDecomposition w = wigner_assemble(pt, state, Transcription::Corrected);
    if (w.envelope == 0.0) return w;
    const complex pair = w.wc1 + w.wc2;
    if (std::abs(pair.imag()) > kRealityTolerance * (std::abs(w.wc1) + std::abs(w.wc2) + 1.0)) {
        throw AssemblyError("off-diagonal Wigner components are not real at the requested point");
    }
    return w;
}

double wigner_value(const PhasePoint& pt, const NormalizedState& state) { return wigner_total(pt, state).total; }

double dominant_oscillatory(const PhasePoint& pt, const NormalizedState& state) {
    const auto& p = state.params();
    const double h = p.hbar;
    return 4.0 * std::norm(p.A) * std::cos(2.0 * p.p0 * pt.x2 / h) * std::cos(2.0 * p.x0 * pt.p1 / h) +
           4.0 * std::norm(p.B) * std::cos(2.0 * p.p0 * pt.x1 / h) * std::cos(2.0 * p.x0 * pt.p2 / h);
}

Grid2D section(const SectionSpec& spec, const NormalizedState& state) {
    return sample_section(spec, [&state](const PhasePoint& pt) { return wigner_value(pt, state); });
}

} // namespace subplanck
