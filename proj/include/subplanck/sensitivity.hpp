#pragma once

#include "subplanck/states.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace subplanck {

/// Position-space quadrature for state overlaps: Gauss-Legendre over
/// [-L, L] with L = |x0| + 10 delta + |position shift|.
struct OverlapQuadrature {
    std::size_t nodes = 1024;
};

/// |<Psi| D1(alpha) D2(beta) |Psi>|^2 by quadrature of the displaced
/// wavefunction. Throws ResolutionError if the rule cannot resolve the
/// momentum kick, or if the result leaves [0, 1] by more than 1e-9.
double overlap_displaced_numeric(const NormalizedState& state, const Displacement& d,
                                 const OverlapQuadrature& quad = {});

/// Equal momentum kick of both particles, alpha = beta = i s.
double equal_shift_overlap_numeric(const NormalizedState& state, double s, const OverlapQuadrature& quad = {});

/// Closed-form equal-shift overlap normalized to 1 at s = 0: (1 + cos 4 x0 s) / 2.
double equal_shift_overlap(const NormalizedState& state, double s);

/// The same closed form with its printed prefactor, 8 |N|^4 (1 + cos 4 x0 s).
double equal_shift_overlap_printed(const NormalizedState& state, double s);

/// Single-particle compass overlap exactly as printed:
/// (3 + 4 cos 2 x0 s1 + cos 4 x0 s1) / 4 (equals 2 at s1 = 0).
double compass_overlap(double s1, double x0);

/// compass_overlap / compass_overlap(0) = cos^4(x0 s1).
double compass_overlap_normalized(double s1, double x0);

/// |<chi| D(i s1) |chi>|^2 / <chi|chi>^2 for chi = psi + phi, by quadrature.
double compass_overlap_numeric(const StateParams& params, double s1, const OverlapQuadrature& quad = {});

/// The general printed overlap for arbitrary (alpha, beta):
/// 16 |N|^4 [(|A|^4 + |B|^4) C^2 + 2 |A||B| C^2],
/// C = cos{x0 (beta + beta*)} cosh{x0 (alpha* - alpha)}.
double overlap_printed(const NormalizedState& state, const Displacement& d);

enum class OverlapModel {
    EntangledEqualShift,  ///< normalized closed form (1 + cos 4 x0 s) / 2
    ZurekCompass,         ///< normalized printed compass form cos^4(x0 s)
    NumericGeneral,       ///< equal-shift quadrature overlap of the compass state
    NumericCompass,       ///< quadrature overlap of the displaced chi = psi + phi
};

std::string_view to_string(OverlapModel model);

struct OverlapCurve {
    std::vector<double> shifts;
    std::vector<double> overlaps;
    std::vector<double> minima;
    OverlapModel model = OverlapModel::EntangledEqualShift;
};

/// Period of a model's curve in s: pi hbar / (2 x0) for the entangled
/// curves, pi hbar / x0 for the compass curves.
double overlap_period(OverlapModel model, const StateParams& params);

/// Single overlap value of a model at shift s.
double overlap_value(OverlapModel model, const NormalizedState& state, double s, const OverlapQuadrature& quad = {});

/// Uniform sweep over [0, s_max] with samples_per_period samples per period
/// of the model (s = 0 and every half period land on samples). Fills minima
/// with every interior local minimum, refined.
OverlapCurve sweep_overlap(OverlapModel model, const NormalizedState& state, double s_max,
                           std::size_t samples_per_period = 400, const OverlapQuadrature& quad = {});

/// First interior local minimum of the sampled curve, refined by a
/// three-point parabola. Throws NoBracketError when none exists.
double find_minimum_shift(const OverlapCurve& curve);

/// Every interior local minimum, refined.
std::vector<double> find_minima(const std::vector<double>& shifts, const std::vector<double>& overlaps);

} // namespace subplanck
