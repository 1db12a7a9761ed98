#include "subplanck/states.hpp"

#include "subplanck/errors.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace subplanck {

namespace {

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// 1 / (sqrt2 pi^{1/4} delta^{1/2} [1 + overlap]^{1/2})
double cat_prefactor(double delta, double overlap) {
    return 1.0 / (std::numbers::sqrt2 * std::pow(std::numbers::pi, 0.25) * std::sqrt(delta) *
                  std::sqrt(1.0 + overlap));
}

} // namespace

void StateParams::validate() const {
    if (!std::isfinite(x0) || !std::isfinite(p0) || !std::isfinite(delta) || !std::isfinite(hbar) ||
        !finite(A) || !finite(B)) {
        throw InvalidArgument("state parameters must be finite");
    }
    if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
    if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
    if (std::abs(A) == 0.0 && std::abs(B) == 0.0) throw InvalidArgument("weights A and B cannot both vanish");
}

double StateParams::position_cat_overlap() const { return std::exp(-x0 * x0 / (delta * delta)); }

double StateParams::momentum_cat_overlap() const {
    return std::exp(-p0 * p0 * delta * delta / (hbar * hbar));
}

double even_position_state(double x, const StateParams& params) {
    const double d2 = 2.0 * params.delta * params.delta;
    const double num = std::exp(-(x + params.x0) * (x + params.x0) / d2) +
                       std::exp(-(x - params.x0) * (x - params.x0) / d2);
    return num * cat_prefactor(params.delta, params.position_cat_overlap());
}

double even_momentum_state(double x, const StateParams& params) {
    const double num = 2.0 * std::cos(params.p0 * x / params.hbar) *
                       std::exp(-x * x / (2.0 * params.delta * params.delta));
    return num * cat_prefactor(params.delta, params.momentum_cat_overlap());
}

double even_position_state_derivative(double x, const StateParams& params) {
    const double d2 = params.delta * params.delta;
    const double plus = x + params.x0;
    const double minus = x - params.x0;
    const double num = -plus / d2 * std::exp(-plus * plus / (2.0 * d2)) -
                       minus / d2 * std::exp(-minus * minus / (2.0 * d2));
    return num * cat_prefactor(params.delta, params.position_cat_overlap());
}

double even_momentum_state_derivative(double x, const StateParams& params) {
    const double k = params.p0 / params.hbar;
    const double d2 = params.delta * params.delta;
    const double num = 2.0 * std::exp(-x * x / (2.0 * d2)) *
                       (-k * std::sin(k * x) - x / d2 * std::cos(k * x));
    return num * cat_prefactor(params.delta, params.momentum_cat_overlap());
}

double cross_overlap(const StateParams& params) {
    const double d = params.delta;
    const double exponent = -(params.x0 * params.x0 / (d * d) +
                              params.p0 * params.p0 * d * d / (params.hbar * params.hbar)) / 4.0;
    return 2.0 * std::exp(exponent) * std::cos(params.x0 * params.p0 / (2.0 * params.hbar)) /
           std::sqrt((1.0 + params.position_cat_overlap()) * (1.0 + params.momentum_cat_overlap()));
}

double normalization_constant(const StateParams& params) {
    params.validate();
    const double g = cross_overlap(params);
    const double weights = std::norm(params.A) + std::norm(params.B);
    const double bracket = weights + 2.0 * (std::conj(params.A) * params.B).real() * g * g;
    if (!(bracket > 1e-10 * weights)) {
        throw DegenerateState("superposition A psi phi + B phi psi has vanishing norm");
    }
    return 1.0 / std::sqrt(bracket);
}

NormalizedState::NormalizedState(const StateParams& params)
    : params_(params), cross_overlap_(0.0), norm_const_(0.0) {
    norm_const_ = normalization_constant(params_);
    cross_overlap_ = subplanck::cross_overlap(params_);
}

complex bipartite_state(double x1, double x2, const NormalizedState& state) {
    const auto& p = state.params();
    const double psi1 = even_position_state(x1, p);
    const double phi1 = even_momentum_state(x1, p);
    const double psi2 = even_position_state(x2, p);
    const double phi2 = even_momentum_state(x2, p);
    return state.norm_const() * (p.A * (psi1 * phi2) + p.B * (phi1 * psi2));
}

PhaseShift phase_shift(complex shift, const StateParams& params) {
    return {2.0 * params.delta * shift.real(), 2.0 * params.hbar * shift.imag() / params.delta};
}

Wavefunction displace(Wavefunction wavefunction, complex shift, const StateParams& params) {
    const PhaseShift d = phase_shift(shift, params);
    if (d.position == 0.0 && d.momentum == 0.0) return wavefunction;
    const double hbar = params.hbar;
    return [f = std::move(wavefunction), d, hbar](double x) {
        const double phase = d.momentum * (x - 0.5 * d.position) / hbar;
        return std::polar(1.0, phase) * f(x - d.position);
    };
}

TwoModeWavefunction::TwoModeWavefunction(std::vector<ProductTerm> terms) : terms_(std::move(terms)) {}

complex TwoModeWavefunction::operator()(double x1, double x2) const {
    complex sum{};
    for (const auto& t : terms_) sum += t.weight * t.mode1(x1) * t.mode2(x2);
    return sum;
}

TwoModeWavefunction TwoModeWavefunction::displaced(const Displacement& d, const StateParams& params) const {
    std::vector<ProductTerm> shifted;
    shifted.reserve(terms_.size());
    for (const auto& t : terms_) {
        shifted.push_back({t.weight, displace(t.mode1, d.alpha, params), displace(t.mode2, d.beta, params)});
    }
    return TwoModeWavefunction(std::move(shifted));
}

TwoModeWavefunction as_two_mode(const NormalizedState& state) {
    const StateParams p = state.params();
    Wavefunction psi = [p](double x) { return complex{even_position_state(x, p), 0.0}; };
    Wavefunction phi = [p](double x) { return complex{even_momentum_state(x, p), 0.0}; };
    std::vector<ProductTerm> terms;
    if (std::abs(p.A) > 0.0) terms.push_back({state.weight_a(), psi, phi});
    if (std::abs(p.B) > 0.0) terms.push_back({state.weight_b(), phi, psi});
    return TwoModeWavefunction(std::move(terms));
}

} // namespace subplanck
