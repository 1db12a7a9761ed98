#include "subplanck/errors.hpp"
#include "subplanck/parallel.hpp"
#include "subplanck/quadrature.hpp"

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

using namespace subplanck;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
    const Rule1D rule = gauss_legendre(6, -1.0, 3.0);
    // int_{-1}^{3} x^11 dx = (3^12 - 1) / 12
    CHECK(rule.integrate([](double x) { return std::pow(x, 11); }) ==
          doctest::Approx((std::pow(3.0, 12) - 1.0) / 12.0).epsilon(1e-13));
    CHECK(rule.integrate([](double) { return 1.0; }) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre resolves a modulated Gaussian") {
    const Rule1D rule = gauss_legendre(400, -20.0, 20.0);
    const double got = rule.integrate([](double x) { return std::cos(5.0 * x) * std::exp(-x * x); });
    CHECK(got == doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-6.25)).epsilon(1e-12));
}

TEST_CASE("unweighted Gauss-Hermite rule") {
    const Rule1D rule = gauss_hermite_unweighted(120, 12.0);
    CHECK(rule.nodes.back() == doctest::Approx(12.0));
    CHECK(rule.integrate([](double x) { return std::exp(-x * x); }) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(rule.integrate([](double x) { return x * x * std::exp(-0.5 * (x - 1.0) * (x - 1.0)); }) ==
          doctest::Approx(2.0 * std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-10));
    CHECK_THROWS_AS(gauss_hermite_unweighted(601, 1.0), InvalidArgument);
}

TEST_CASE("trapezoid is spectrally accurate on decaying smooth integrands") {
    const Rule1D rule = trapezoid(81, -10.0, 10.0);
    CHECK(rule.integrate([](double x) { return std::exp(-x * x); }) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS_AS(trapezoid(1, 0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), InvalidArgument);
}

TEST_CASE("parallel_for visits every index once and propagates exceptions") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 7) throw ResolutionError("boom"); }),
                    ResolutionError);
    CHECK(worker_count() >= 1);
}
