#include "subplanck/quadrature.hpp"

#include "subplanck/errors.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

namespace subplanck {

Rule1D gauss_legendre(std::size_t n, double lo, double hi) {
    if (n < 1) throw InvalidArgument("gauss_legendre: need at least one node");
    if (!(hi > lo)) throw InvalidArgument("gauss_legendre: empty interval");

    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
        table(gsl_integration_glfixed_table_alloc(n), &gsl_integration_glfixed_table_free);
    if (!table) throw ResolutionError("gauss_legendre: GSL could not build an " + std::to_string(n) + "-point table");

    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        gsl_integration_glfixed_point(lo, hi, i, &rule.nodes[i], &rule.weights[i], table.get());
    }
    return rule;
}

Rule1D gauss_hermite_unweighted(std::size_t n, double half_width) {
    if (n < 2 || n > 600) throw InvalidArgument("gauss_hermite_unweighted: node count must lie in [2, 600]");
    if (!(half_width > 0.0)) throw InvalidArgument("gauss_hermite_unweighted: half_width must be positive");

    std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)> ws(
        gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, n, 0.0, 1.0, 0.0, 0.0),
        &gsl_integration_fixed_free);
    if (!ws) throw ResolutionError("gauss_hermite_unweighted: GSL could not build the Hermite table");
    const double* t = gsl_integration_fixed_nodes(ws.get());

    // Christoffel form of the corrected weight: w_i e^{t_i^2} = 1 / sum_k h_k(t_i)^2,
    // with h_k the orthonormal Hermite functions (bounded, so no overflow).
    const double t_max = std::abs(t[n - 1]);
    const double scale = half_width / t_max;
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = t[i];
        double h_prev = 0.0;
        double h = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
        double sum = h * h;
        for (std::size_t k = 1; k < n; ++k) {
            const double h_next = std::sqrt(2.0 / k) * x * h - std::sqrt((k - 1.0) / k) * h_prev;
            h_prev = h;
            h = h_next;
            sum += h * h;
        }
        rule.nodes[i] = scale * x;
        rule.weights[i] = scale / sum;
    }
    return rule;
}

Rule1D trapezoid(std::size_t n, double lo, double hi) {
    if (n < 2) throw InvalidArgument("trapezoid: need at least two nodes");
    if (!(hi > lo)) throw InvalidArgument("trapezoid: empty interval");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = (i + 1 == n) ? hi : lo + h * static_cast<double>(i);
        rule.weights[i] = (i == 0 || i + 1 == n) ? 0.5 * h : h;
    }
    return rule;
}

} // namespace subplanck
