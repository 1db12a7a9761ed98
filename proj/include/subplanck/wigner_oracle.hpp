#pragma once

#include "subplanck/phase_space.hpp"
#include "subplanck/quadrature.hpp"
#include "subplanck/states.hpp"

#include <cstddef>
#include <memory>

namespace subplanck {

/// Quadrature over the shift variables of the correlation function. Shifts
/// run over [-half_width, half_width].
struct QuadratureSpec {
    enum class Rule { GaussLegendre, GaussHermiteWeighted };

    double half_width = 40.0;
    std::size_t nodes = 2048;
    Rule rule = Rule::GaussLegendre;
    /// Extra momentum scale the rule must resolve on top of the evaluation
    /// point (the state's p0 for bipartite evaluations).
    double max_momentum = 0.0;

    /// Throws InvalidArgument for half_width <= 0 and ResolutionError for
    /// fewer than 16 nodes.
    void validate() const;

    /// Smallest node count that resolves wavenumber momentum/hbar over the
    /// shift window: 8 H momentum / (pi hbar).
    std::size_t required_nodes(double momentum, double hbar) const;

    /// Defaults for a state: H = 2 (2 x0 + 10 delta), max_momentum = p0,
    /// and at least 2048 nodes.
    static QuadratureSpec for_state(const StateParams& params);

    /// Same spec with twice the nodes.
    QuadratureSpec refined() const;
};

/// Nodes and weights for a spec; built once per distinct spec and shared.
std::shared_ptr<const Rule1D> shift_rule(const QuadratureSpec& quad);

/// Psi*(x1 + a/2, x2 + b/2) Psi(x1 - a/2, x2 - b/2).
complex correlation(double x1, double a, double x2, double b, const NormalizedState& state);

struct OracleValue {
    double value = 0.0;
    double imag_residual = 0.0;
    /// Set when the integrand at the edge of the shift window exceeds 1e-12
    /// of its peak.
    bool truncated = false;
};

/// Oracle tolerance on the imaginary part of a Wigner value.
inline constexpr double kOracleImagTolerance = 1e-9;

/// W(pt) of an arbitrary sum-of-products two-mode wavefunction by
/// tensor-product quadrature of the Fourier integral over (a, b). Throws
/// ResolutionError if the rule does not resolve max(|p1|, |p2|, max_momentum).
OracleValue wigner_numeric_2mode(const PhasePoint& pt, const TwoModeWavefunction& psi, double hbar,
                                 const QuadratureSpec& quad);

/// Bipartite oracle for the compass state. Throws AssemblyError when the
/// imaginary residual exceeds kOracleImagTolerance.
double wigner_numeric_2mode(const PhasePoint& pt, const NormalizedState& state, const QuadratureSpec& quad);

/// Single-mode W(x, p) = (2 pi hbar)^{-1} int f*(x + a/2) f(x - a/2) e^{i p a/hbar} da.
OracleValue wigner_numeric_1mode_detail(const Wavefunction& f, double x, double p, double hbar,
                                        const QuadratureSpec& quad);
double wigner_numeric_1mode(const Wavefunction& f, double x, double p, double hbar, const QuadratureSpec& quad);

} // namespace subplanck
