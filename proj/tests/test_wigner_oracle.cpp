#include "oracles.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/quadrature.hpp"
#include "subplanck/wigner_analytic.hpp"
#include "subplanck/wigner_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace subplanck;

namespace {

StateParams ground_params(double delta = 1.0, double hbar = 1.0) {
    StateParams p;
    p.x0 = p.p0 = 0.0;
    p.delta = delta;
    p.hbar = hbar;
    p.A = {1.0, 0.0};
    p.B = {};
    return p;
}

QuadratureSpec cat_quadrature() {
    QuadratureSpec q;
    q.half_width = 40.0;
    q.nodes = 1024;
    q.max_momentum = 5.0;
    return q;
}

} // namespace

TEST_CASE("correlation function basics") {
    const NormalizedState s{StateParams{}};
    oracle::Gen gen(31);
    for (int i = 0; i < 30; ++i) {
        const double x1 = gen.uniform(-6, 6);
        const double x2 = gen.uniform(-6, 6);
        const double a = gen.uniform(-12, 12);
        const double b = gen.uniform(-12, 12);
        const complex at_zero = correlation(x1, 0.0, x2, 0.0, s);
        CHECK(at_zero.imag() == 0.0);
        CHECK(at_zero.real() == doctest::Approx(std::norm(bipartite_state(x1, x2, s))));
        CHECK(std::abs(correlation(x1, a, x2, b, s) - std::conj(correlation(x1, -a, x2, -b, s))) < 1e-15);
    }
}

TEST_CASE("correlation decays like a Gaussian in the shifts") {
    // Every Gaussian pair in Psi*(x + a/2) Psi(x - a/2) has centres at most
    // 2 x0 apart, so u^2 + v^2 >= (u - v)^2 / 2 gives decay e^{-(|a| - 2 x0)^2 / 4}.
    const NormalizedState s{StateParams{}};
    oracle::Gen gen(32);
    double max_psi2 = 0.0;
    for (int i = 0; i < 4000; ++i) {
        max_psi2 = std::max(max_psi2, std::norm(bipartite_state(gen.uniform(-8, 8), gen.uniform(-8, 8), s)));
    }
    for (int i = 0; i < 200; ++i) {
        const double a = gen.uniform(10.5, 25.0) * (gen.uniform(0, 1) < 0.5 ? -1 : 1);
        const double excess = std::abs(a) - 10.0;
        const double bound = 64.0 * max_psi2 * std::exp(-excess * excess / 4.0);
        CHECK(std::abs(correlation(gen.uniform(-3, 3), a, gen.uniform(-3, 3), 0.0, s)) <= bound);
    }
}

TEST_CASE("ground-state peaks") {
    for (double hbar : {0.5, 1.0, 2.0}) {
        const StateParams p = ground_params(1.3, hbar);
        QuadratureSpec q;
        q.half_width = 20.0;
        q.nodes = 256;
        const double expect2 = 1.0 / (std::numbers::pi * hbar * std::numbers::pi * hbar);
        CHECK(wigner_numeric_2mode(PhasePoint{}, NormalizedState{p}, q) == doctest::Approx(expect2).epsilon(1e-12));
        const Wavefunction g = [p](double x) { return complex{even_position_state(x, p)}; };
        CHECK(wigner_numeric_1mode(g, 0.0, 0.0, hbar, q) == doctest::Approx(1.0 / (std::numbers::pi * hbar)).epsilon(1e-12));
    }
}

TEST_CASE("oracle agrees with the analytic Gaussian away from the origin") {
    const StateParams p = ground_params(0.8, 1.1);
    QuadratureSpec q;
    q.half_width = 20.0;
    q.nodes = 512;
    oracle::Gen gen(33);
    for (int i = 0; i < 30; ++i) {
        const PhasePoint z{gen.uniform(-1.5, 1.5), gen.uniform(-1.5, 1.5), gen.uniform(-1.5, 1.5), gen.uniform(-1.5, 1.5)};
        CHECK(wigner_numeric_2mode(z, NormalizedState{p}, q) ==
              doctest::Approx(oracle::ground_wigner(z.x1, z.p1, z.x2, z.p2, p.delta, p.hbar)).epsilon(1e-11).scale(1e-3));
    }
}

TEST_CASE("position cat: first sign change of W(0, p) near pi hbar / 4 x0") {
    const StateParams p;
    const Wavefunction psi = [p](double x) { return complex{even_position_state(x, p)}; };
    const QuadratureSpec q = cat_quadrature();
    const double target = std::numbers::pi / (4.0 * p.x0);
    double prev = wigner_numeric_1mode(psi, 0.0, 0.0, 1.0, q);
    double found = -1.0;
    for (int k = 1; k <= 400 && found < 0.0; ++k) {
        const double pk = 0.001 * k;
        const double w = wigner_numeric_1mode(psi, 0.0, pk, 1.0, q);
        if ((prev > 0.0) != (w > 0.0)) found = pk;
        prev = w;
    }
    CHECK(found >= 0.9 * target);
    CHECK(found <= 1.1 * target);
}

TEST_CASE("single-mode oracle integrates to one") {
    const StateParams p;
    const Wavefunction psi = [p](double x) { return complex{even_position_state(x, p)}; };
    const QuadratureSpec q = cat_quadrature();
    const Rule1D rx = gauss_legendre(120, -13.0, 13.0);
    const Rule1D rp = gauss_legendre(120, -8.0, 8.0);
    double total = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        for (std::size_t j = 0; j < rp.size(); ++j) {
            total += rx.weights[i] * rp.weights[j] * wigner_numeric_1mode(psi, rx.nodes[i], rp.nodes[j], 1.0, q);
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bipartite oracle matches the closed form for random states") {
    oracle::Gen gen(34);
    for (int i = 0; i < 8; ++i) {
        const StateParams p = gen.state();
        const NormalizedState s(p);
        const QuadratureSpec q = QuadratureSpec::for_state(p);
        const double peak = 1.0 / (std::numbers::pi * p.hbar * std::numbers::pi * p.hbar);
        for (int k = 0; k < 10; ++k) {
            const PhasePoint z{gen.uniform(-p.x0 - 1, p.x0 + 1), gen.uniform(-p.p0 - 1, p.p0 + 1),
                               gen.uniform(-p.x0 - 1, p.x0 + 1), gen.uniform(-p.p0 - 1, p.p0 + 1)};
            CHECK(std::abs(wigner_numeric_2mode(z, s, q) - wigner_value(z, s)) <= 1e-9 * peak);
        }
    }
}

TEST_CASE("oracle properties: parity, reality, convergence") {
    const NormalizedState s{StateParams{}};
    const QuadratureSpec q = QuadratureSpec::for_state(s.params());
    const TwoModeWavefunction psi = as_two_mode(s);
    oracle::Gen gen(35);
    for (int i = 0; i < 10; ++i) {
        const PhasePoint z{gen.uniform(-6, 6), gen.uniform(-6, 6), gen.uniform(-6, 6), gen.uniform(-6, 6)};
        const OracleValue v = wigner_numeric_2mode(z, psi, 1.0, q);
        CHECK(std::abs(v.imag_residual) < kOracleImagTolerance);
        CHECK_FALSE(v.truncated);
        CHECK(std::abs(wigner_numeric_2mode({-z.x1, -z.p1, -z.x2, -z.p2}, psi, 1.0, q).value - v.value) < 1e-14);
        CHECK(std::abs(wigner_numeric_2mode(z, psi, 1.0, q.refined()).value - v.value) < 1e-8);
    }
}

TEST_CASE("Gauss-Hermite shift rule agrees with Gauss-Legendre") {
    const NormalizedState s{StateParams{}};
    QuadratureSpec gl = QuadratureSpec::for_state(s.params());
    QuadratureSpec gh = gl;
    gh.rule = QuadratureSpec::Rule::GaussHermiteWeighted;
    gh.nodes = 600;
    const PhasePoint z{0.4, -0.3, 1.2, 0.25};
    CHECK(std::abs(wigner_numeric_2mode(z, s, gh) - wigner_numeric_2mode(z, s, gl)) < 1e-9);
}

TEST_CASE("oracle marginal reproduces |Psi|^2") {
    const NormalizedState s{StateParams{}};
    const QuadratureSpec q = QuadratureSpec::for_state(s.params());
    const TwoModeWavefunction psi = as_two_mode(s);
    const Rule1D rp = trapezoid(81, -13.0, 13.0);
    for (double x1 : {-5.0, 0.0, 2.5}) {
        for (double x2 : {0.0, 4.75}) {
            double m = 0.0;
            for (std::size_t a = 0; a < rp.size(); ++a) {
                for (std::size_t b = 0; b < rp.size(); ++b) {
                    m += rp.weights[a] * rp.weights[b] *
                         wigner_numeric_2mode({x1, rp.nodes[a], x2, rp.nodes[b]}, psi, 1.0, q).value;
                }
            }
            CHECK(std::abs(m - std::norm(bipartite_state(x1, x2, s))) < 1e-5);
        }
    }
}

TEST_CASE("resolution and truncation diagnostics") {
    const NormalizedState s{StateParams{}};
    QuadratureSpec q = QuadratureSpec::for_state(s.params());
    q.nodes = 8;
    CHECK_THROWS_AS(wigner_numeric_2mode(PhasePoint{}, s, q), ResolutionError);
    q.nodes = 100;  // below 8 H p0 / pi
    CHECK_THROWS_AS(wigner_numeric_2mode(PhasePoint{}, s, q), ResolutionError);
    q = QuadratureSpec::for_state(s.params());
    CHECK_THROWS_AS(wigner_numeric_2mode({0, 400.0, 0, 0}, s, q), ResolutionError);
    q.half_width = 4.0;
    CHECK(wigner_numeric_2mode({1.0, 0.0, 0.0, 0.0}, as_two_mode(s), 1.0, q).truncated);
    q.half_width = -1.0;
    CHECK_THROWS_AS(q.validate(), InvalidArgument);
}
