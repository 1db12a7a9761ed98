#pragma once

#include <cstddef>
#include <vector>

namespace subplanck {

/// A one-dimensional quadrature rule: sum_i weights[i] * f(nodes[i]).
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    auto integrate(F&& f) const {
        decltype(f(0.0)) sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// n-point Gauss-Legendre rule mapped to [lo, hi].
Rule1D gauss_legendre(std::size_t n, double lo, double hi);

/// n-point Gauss-Hermite rule for unweighted integrands on the real line.
/// The Gaussian weight is divided back out of the weights, and the abscissae
/// are scaled so that the outermost node sits at +/-half_width.
/// Valid for n <= 600 (larger n overflows the weight correction).
Rule1D gauss_hermite_unweighted(std::size_t n, double half_width);

/// n-point composite trapezoidal rule on [lo, hi] (n >= 2). Spectrally accurate
/// for smooth integrands that are negligible at both ends.
Rule1D trapezoid(std::size_t n, double lo, double hi);

} // namespace subplanck
