#include "subplanck/wigner_oracle.hpp"

#include "subplanck/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

namespace subplanck {

namespace {

constexpr double kTruncationRatio = 1e-12;

// Samples conj(f(x + a/2)) and f(x - a/2) at every shift node.
struct ShiftSamples {
    std::vector<complex> plus;
    std::vector<complex> minus;
};

ShiftSamples sample(const Wavefunction& f, double x, const Rule1D& rule) {
    ShiftSamples s;
    s.plus.resize(rule.size());
    s.minus.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double half = 0.5 * rule.nodes[i];
        s.plus[i] = std::conj(f(x + half));
        s.minus[i] = f(x - half);
    }
    return s;
}

// One-dimensional Fourier integral of a sampled correlation product, plus
// whether its magnitude at the window edge is non-negligible.
struct AxisIntegral {
    complex value;
    bool truncated;
};

AxisIntegral fourier(const ShiftSamples& left, const ShiftSamples& right, const std::vector<complex>& kernel,
                     const Rule1D& rule) {
    complex sum{};
    double peak = 0.0;
    const std::size_t n = rule.size();
    for (std::size_t i = 0; i < n; ++i) {
        const complex c = left.plus[i] * right.minus[i];
        peak = std::max(peak, std::abs(c));
        sum += rule.weights[i] * c * kernel[i];
    }
    const double edge = std::max(std::abs(left.plus[0] * right.minus[0]),
                                 std::abs(left.plus[n - 1] * right.minus[n - 1]));
    return {sum, peak > 0.0 && edge > kTruncationRatio * peak};
}

std::vector<complex> plane_wave(double p, double hbar, const Rule1D& rule) {
    std::vector<complex> k(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) k[i] = std::polar(1.0, p * rule.nodes[i] / hbar);
    return k;
}

void check_resolution(const QuadratureSpec& quad, double momentum, double hbar) {
    quad.validate();
    const std::size_t need = quad.required_nodes(momentum, hbar);
    if (quad.nodes < need) {
        throw ResolutionError("quadrature with " + std::to_string(quad.nodes) +
                              " nodes cannot resolve momentum " + std::to_string(momentum) + "; need " +
                              std::to_string(need));
    }
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw InvalidArgument("quadrature half_width must be positive and finite");
    }
    if (nodes < 16) throw ResolutionError("quadrature needs at least 16 nodes, got " + std::to_string(nodes));
    if (rule == Rule::GaussHermiteWeighted && nodes > 600) {
        throw InvalidArgument("Gauss-Hermite rule supports at most 600 nodes");
    }
}

std::size_t QuadratureSpec::required_nodes(double momentum, double hbar) const {
    return static_cast<std::size_t>(std::ceil(8.0 * half_width * std::abs(momentum) / (std::numbers::pi * hbar)));
}

QuadratureSpec QuadratureSpec::for_state(const StateParams& params) {
    QuadratureSpec q;
    q.half_width = 2.0 * (2.0 * std::abs(params.x0) + 10.0 * params.delta);
    q.max_momentum = std::abs(params.p0);
    q.nodes = std::max<std::size_t>(2048, q.required_nodes(2.0 * q.max_momentum, params.hbar));
    return q;
}

QuadratureSpec QuadratureSpec::refined() const {
    QuadratureSpec q = *this;
    q.nodes *= 2;
    return q;
}

std::shared_ptr<const Rule1D> shift_rule(const QuadratureSpec& quad) {
    quad.validate();
    using Key = std::tuple<int, std::size_t, double>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const Rule1D>> cache;

    const Key key{static_cast<int>(quad.rule), quad.nodes, quad.half_width};
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto rule = std::make_shared<const Rule1D>(
        quad.rule == QuadratureSpec::Rule::GaussLegendre
            ? gauss_legendre(quad.nodes, -quad.half_width, quad.half_width)
            : gauss_hermite_unweighted(quad.nodes, quad.half_width));
    cache.emplace(key, rule);
    return rule;
}

complex correlation(double x1, double a, double x2, double b, const NormalizedState& state) {
    return std::conj(bipartite_state(x1 + 0.5 * a, x2 + 0.5 * b, state)) *
           bipartite_state(x1 - 0.5 * a, x2 - 0.5 * b, state);
}

OracleValue wigner_numeric_2mode(const PhasePoint& pt, const TwoModeWavefunction& psi, double hbar,
                                 const QuadratureSpec& quad) {
    check_resolution(quad, std::max({std::abs(pt.p1), std::abs(pt.p2), quad.max_momentum}), hbar);
    const auto rule = shift_rule(quad);
    const auto terms = psi.terms();

    std::vector<ShiftSamples> s1;
    std::vector<ShiftSamples> s2;
    for (const auto& t : terms) {
        s1.push_back(sample(t.mode1, pt.x1, *rule));
        s2.push_back(sample(t.mode2, pt.x2, *rule));
    }
    const auto k1 = plane_wave(pt.p1, hbar, *rule);
    const auto k2 = plane_wave(pt.p2, hbar, *rule);

    // Psi is a finite sum of products, so the tensor-product rule over (a, b)
    // splits exactly into products of one-dimensional sums per term pair.
    complex total{};
    bool truncated = false;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        for (std::size_t u = 0; u < terms.size(); ++u) {
            const AxisIntegral i1 = fourier(s1[t], s1[u], k1, *rule);
            const AxisIntegral i2 = fourier(s2[t], s2[u], k2, *rule);
            total += std::conj(terms[t].weight) * terms[u].weight * i1.value * i2.value;
            truncated = truncated || i1.truncated || i2.truncated;
        }
    }
    const double norm = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi * hbar * hbar);
    return {norm * total.real(), norm * total.imag(), truncated};
}

double wigner_numeric_2mode(const PhasePoint& pt, const NormalizedState& state, const QuadratureSpec& quad) {
    QuadratureSpec q = quad;
    q.max_momentum = std::max(q.max_momentum, std::abs(state.params().p0));
    const OracleValue v = wigner_numeric_2mode(pt, as_two_mode(state), state.params().hbar, q);
    if (std::abs(v.imag_residual) > kOracleImagTolerance) {
        throw AssemblyError("oracle Wigner value has imaginary residual " + std::to_string(v.imag_residual));
    }
    return v.value;
}

OracleValue wigner_numeric_1mode_detail(const Wavefunction& f, double x, double p, double hbar,
                                        const QuadratureSpec& quad) {
    check_resolution(quad, std::max(std::abs(p), quad.max_momentum), hbar);
    const auto rule = shift_rule(quad);
    const ShiftSamples s = sample(f, x, *rule);
    const AxisIntegral i = fourier(s, s, plane_wave(p, hbar, *rule), *rule);
    const double norm = 1.0 / (2.0 * std::numbers::pi * hbar);
    return {norm * i.value.real(), norm * i.value.imag(), i.truncated};
}

double wigner_numeric_1mode(const Wavefunction& f, double x, double p, double hbar, const QuadratureSpec& quad) {
    const OracleValue v = wigner_numeric_1mode_detail(f, x, p, hbar, quad);
    if (std::abs(v.imag_residual) > kOracleImagTolerance) {
        throw AssemblyError("oracle Wigner value has imaginary residual " + std::to_string(v.imag_residual));
    }
    return v.value;
}

} // namespace subplanck
