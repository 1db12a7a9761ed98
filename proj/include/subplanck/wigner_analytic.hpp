#pragma once

#include "subplanck/phase_space.hpp"
#include "subplanck/states.hpp"

namespace subplanck {

/// Which transcription of the closed-form components to evaluate.
///
/// Printed is the literal closed-form transcription. Corrected is the
/// form consistent with the Weyl transform of Psi: the purely oscillatory
/// term of each diagonal component carries weight 1 (not 2), and the
/// off-diagonal weights are A*B and its conjugate, i.e.
/// (A1B1 + A2B2) + i(A1B2 - A2B1) and (A1B1 + A2B2) - i(A1B2 - A2B1).
/// The complex-argument cosh/cos brackets are identical in both.
enum class Transcription { Printed, Corrected };

/// Diagonal component carrying |A|^2 (structure in the x2-p1 plane).
double component_d1(const PhasePoint& pt, const NormalizedState& state,
                    Transcription form = Transcription::Corrected);

/// Diagonal component carrying |B|^2 (structure in the x1-p2 plane).
double component_d2(const PhasePoint& pt, const NormalizedState& state,
                    Transcription form = Transcription::Corrected);

/// Off-diagonal components. Every summand depends on the phase point only
/// through the EPR combinations x1 +/- x2, p1 +/- p2.
complex component_c1(const PhasePoint& pt, const NormalizedState& state,
                     Transcription form = Transcription::Corrected);
complex component_c2(const PhasePoint& pt, const NormalizedState& state,
                     Transcription form = Transcription::Corrected);

/// The same brackets evaluated from the four EPR variables directly.
complex component_c1_epr(double x_sum, double x_diff, double p_sum, double p_diff,
                         const NormalizedState& state, Transcription form = Transcription::Corrected);

/// Common Gaussian prefactor of the assembled Wigner function,
/// |N|^2 e^{-(x1^2+x2^2)/delta^2 - (p1^2+p2^2) delta^2/hbar^2}
///   / (2 pi^2 hbar^2 (1 + e^{-x0^2/delta^2}) (1 + e^{-p0^2 delta^2/hbar^2})).
/// The overall constant is the one that makes W integrate to 1.
double envelope(const PhasePoint& pt, const NormalizedState& state);

/// e^{-x0^2/(2 delta^2) - p0^2 delta^2/(2 hbar^2)}: damping of the off-diagonal terms.
double cross_damping(const StateParams& params);

struct WignerDecomposition {
    double wd1 = 0.0;
    double wd2 = 0.0;
    complex wc1{};
    complex wc2{};
    double envelope = 0.0;
    double cross_damping = 0.0;
    /// envelope * (wd1 + wd2 + cross_damping * Re(wc1 + wc2))
    double total = 0.0;
};

/// Tolerance on |Im(wc1 + wc2)| relative to (|wc1| + |wc2| + 1).
inline constexpr double kRealityTolerance = 1e-9;

/// Assembles W from the corrected components. Throws AssemblyError when the
/// off-diagonal pair is not real to kRealityTolerance.
WignerDecomposition wigner_total(const PhasePoint& pt, const NormalizedState& state);

/// Same assembly from an explicit transcription, without the reality check.
/// Used to report how far the printed forms are from the true W.
WignerDecomposition wigner_assemble(const PhasePoint& pt, const NormalizedState& state, Transcription form);

double wigner_value(const PhasePoint& pt, const NormalizedState& state);

/// 4|A|^2 cos(2 p0 x2/hbar) cos(2 x0 p1/hbar) + 4|B|^2 cos(2 p0 x1/hbar) cos(2 x0 p2/hbar):
/// the sum of the purely oscillatory terms of the printed diagonal components.
/// In corrected units W ~= envelope * dominant_oscillatory / 2 near the origin.
double dominant_oscillatory(const PhasePoint& pt, const NormalizedState& state);

/// W sampled on a section (row-major, axis1 fastest).
Grid2D section(const SectionSpec& spec, const NormalizedState& state);

} // namespace subplanck
