#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace subplanck {

using complex = std::complex<double>;

/// One-dimensional wavefunction x -> amplitude.
using Wavefunction = std::function<complex(double)>;

/// Physical constants and entanglement weights of the bipartite compass state
/// Psi(x1, x2) = N [A psi(x1) phi(x2) + B phi(x1) psi(x2)].
///
/// psi is the even position cat (Gaussians of width delta at +/-x0), phi the
/// even momentum cat (one Gaussian carrying momenta +/-p0). The abstract
/// coherent amplitude of the ket notation is represented by the pair (x0, p0).
/// Defaults reproduce the reference regime x0 = p0 = 5, hbar = delta = 1,
/// A = (1 + i)/sqrt2, B = (1 - i)/sqrt2.
struct StateParams {
    double x0 = 5.0;
    double p0 = 5.0;
    double delta = 1.0;
    double hbar = 1.0;
    complex A{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
    complex B{1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2};

    /// Throws InvalidArgument unless delta > 0, hbar > 0, everything finite and
    /// (A, B) != (0, 0).
    void validate() const;

    /// e^{-x0^2/delta^2}: overlap of the two position-cat Gaussians.
    double position_cat_overlap() const;
    /// e^{-p0^2 delta^2/hbar^2}: overlap of the two momentum-cat Gaussians.
    double momentum_cat_overlap() const;
};

/// Validated parameters together with the normalization constant and the
/// cross overlap <psi|phi> it was derived from. Immutable.
class NormalizedState {
public:
    explicit NormalizedState(const StateParams& params);

    const StateParams& params() const { return params_; }
    double norm_const() const { return norm_const_; }
    double cross_overlap() const { return cross_overlap_; }

    /// Effective weights N*A and N*B.
    complex weight_a() const { return norm_const_ * params_.A; }
    complex weight_b() const { return norm_const_ * params_.B; }

private:
    StateParams params_;
    double cross_overlap_;
    double norm_const_;
};

/// Phase-space shift of the two particles. A complex shift s maps to a
/// position displacement 2 delta Re(s) and a momentum kick 2 hbar Im(s)/delta.
struct Displacement {
    complex alpha;  // particle 1
    complex beta;   // particle 2
};

/// psi(x): normalized even superposition of Gaussians centred at +/-x0.
double even_position_state(double x, const StateParams& params);
/// phi(x): normalized even superposition of momentum kicks +/-p0 on a
/// Gaussian centred at the origin (a real cosine-modulated Gaussian).
double even_momentum_state(double x, const StateParams& params);

/// d psi / dx and d phi / dx, used for momentum moments.
double even_position_state_derivative(double x, const StateParams& params);
double even_momentum_state_derivative(double x, const StateParams& params);

/// <psi|phi> in closed form (Gaussian integration).
double cross_overlap(const StateParams& params);

/// N = (|A|^2 + |B|^2 + 2 Re(A* B) g^2)^{-1/2}; throws DegenerateState when
/// the bracket is not safely positive.
double normalization_constant(const StateParams& params);

/// Psi(x1, x2).
complex bipartite_state(double x1, double x2, const NormalizedState& state);

/// Position-space action of the displacement operator:
/// out(x) = exp(i p_d (x - x_d/2)/hbar) in(x - x_d).
Wavefunction displace(Wavefunction wavefunction, complex shift, const StateParams& params);

/// Position displacement x_d and momentum kick p_d for a complex shift.
struct PhaseShift {
    double position;
    double momentum;
};
PhaseShift phase_shift(complex shift, const StateParams& params);

/// A term w * f(x1) g(x2) of a two-mode wavefunction.
struct ProductTerm {
    complex weight;
    Wavefunction mode1;
    Wavefunction mode2;
};

/// Finite sum of product terms. Generic carrier for the numerical routines
/// (quadrature oracle, overlaps) so they never depend on the closed forms.
class TwoModeWavefunction {
public:
    explicit TwoModeWavefunction(std::vector<ProductTerm> terms);

    complex operator()(double x1, double x2) const;
    std::span<const ProductTerm> terms() const { return terms_; }

    /// D1(alpha) D2(beta) applied term by term.
    TwoModeWavefunction displaced(const Displacement& d, const StateParams& params) const;

private:
    std::vector<ProductTerm> terms_;
};

/// The compass state as N A psi(x1) phi(x2) + N B phi(x1) psi(x2).
TwoModeWavefunction as_two_mode(const NormalizedState& state);

} // namespace subplanck
