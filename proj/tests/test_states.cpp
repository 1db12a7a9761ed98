#include "oracles.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/quadrature.hpp"
#include "subplanck/states.hpp"

#include <doctest.h>

#include <cmath>

using namespace subplanck;

namespace {

double norm_1d(const Wavefunction& f, double half) {
    const Rule1D rule = gauss_legendre(600, -half, half);
    return rule.integrate([&](double x) { return std::norm(f(x)); });
}

} // namespace

TEST_CASE("the single-mode cats are normalized") {
    oracle::Gen gen(11);
    for (int i = 0; i < 20; ++i) {
        const StateParams p = gen.state();
        const double half = p.x0 + 12.0 * p.delta;
        CHECK(norm_1d([&](double x) { return complex{even_position_state(x, p)}; }, half) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(norm_1d([&](double x) { return complex{even_momentum_state(x, p)}; }, half) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("cross overlap matches quadrature") {
    oracle::Gen gen(12);
    for (int i = 0; i < 20; ++i) {
        StateParams p = gen.state();
        p.x0 = gen.uniform(0.0, 3.0);
        p.p0 = gen.uniform(0.0, 3.0);
        const Rule1D rule = gauss_legendre(600, -(p.x0 + 12.0 * p.delta), p.x0 + 12.0 * p.delta);
        const double q = rule.integrate([&](double x) { return even_position_state(x, p) * even_momentum_state(x, p); });
        CHECK(cross_overlap(p) == doctest::Approx(q).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("the bipartite state has unit norm for arbitrary weights") {
    oracle::Gen gen(13);
    for (int i = 0; i < 10; ++i) {
        StateParams p = gen.state();
        p.x0 = gen.uniform(0.0, 2.5);
        p.p0 = gen.uniform(0.0, 2.5);
        const NormalizedState s(p);
        const double half = p.x0 + 12.0 * p.delta;
        const Rule1D rule = gauss_legendre(300, -half, half);
        double total = 0.0;
        for (std::size_t a = 0; a < rule.size(); ++a) {
            for (std::size_t b = 0; b < rule.size(); ++b) {
                total += rule.weights[a] * rule.weights[b] * std::norm(bipartite_state(rule.nodes[a], rule.nodes[b], s));
            }
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("reference regime constants") {
    const NormalizedState s{StateParams{}};
    // |A| = |B| = 1 and Re(A* B) = 0 give N = 1/sqrt2 exactly.
    CHECK(s.norm_const() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(s.cross_overlap()) < 1e-5);
    CHECK(even_position_state(0.0, s.params()) > 0.0);
}

TEST_CASE("derivatives match central differences") {
    oracle::Gen gen(14);
    for (int i = 0; i < 20; ++i) {
        const StateParams p = gen.state();
        const double x = gen.uniform(-p.x0 - 2.0, p.x0 + 2.0);
        const double h = 1e-5;
        const double fd_psi = (even_position_state(x + h, p) - even_position_state(x - h, p)) / (2.0 * h);
        const double fd_phi = (even_momentum_state(x + h, p) - even_momentum_state(x - h, p)) / (2.0 * h);
        CHECK(even_position_state_derivative(x, p) == doctest::Approx(fd_psi).epsilon(1e-6).scale(1.0));
        CHECK(even_momentum_state_derivative(x, p) == doctest::Approx(fd_phi).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("parameter validation") {
    StateParams p;
    p.delta = 0.0;
    CHECK_THROWS_AS(NormalizedState{p}, InvalidArgument);
    p = StateParams{};
    p.hbar = -1.0;
    CHECK_THROWS_AS(NormalizedState{p}, InvalidArgument);
    p = StateParams{};
    p.A = p.B = complex{};
    CHECK_THROWS_AS(NormalizedState{p}, InvalidArgument);
    p = StateParams{};
    p.x0 = std::nan("");
    CHECK_THROWS_AS(NormalizedState{p}, InvalidArgument);
}

TEST_CASE("a superposition that cancels is degenerate") {
    // With x0 = p0 = 0 both cats are the same Gaussian, so A = -B annihilates Psi.
    StateParams p;
    p.x0 = p.p0 = 0.0;
    p.A = {1.0, 0.0};
    p.B = {-1.0, 0.0};
    CHECK_THROWS_AS(NormalizedState{p}, DegenerateState);
}

TEST_CASE("displacement is unitary and shifts as specified") {
    const StateParams p;
    const Wavefunction psi = [&](double x) { return complex{even_position_state(x, p)}; };
    oracle::Gen gen(15);
    for (int i = 0; i < 10; ++i) {
        const complex s{gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)};
        const Wavefunction moved = displace(psi, s, p);
        CHECK(norm_1d(moved, 20.0) == doctest::Approx(1.0).epsilon(1e-12));
        const PhaseShift d = phase_shift(s, p);
        CHECK(d.position == doctest::Approx(2.0 * s.real()));
        CHECK(d.momentum == doctest::Approx(2.0 * s.imag()));
        const double x = gen.uniform(-6.0, 6.0);
        CHECK(std::abs(moved(x)) == doctest::Approx(std::abs(psi(x - d.position))).epsilon(1e-14).scale(1.0));
    }
}

TEST_CASE("two-mode form reproduces Psi, dropping zero weights") {
    StateParams p;
    const NormalizedState s(p);
    const TwoModeWavefunction two = as_two_mode(s);
    CHECK(two.terms().size() == 2);
    oracle::Gen gen(16);
    for (int i = 0; i < 20; ++i) {
        const double x1 = gen.uniform(-7.0, 7.0);
        const double x2 = gen.uniform(-7.0, 7.0);
        CHECK(std::abs(two(x1, x2) - bipartite_state(x1, x2, s)) < 1e-15);
    }
    p.B = complex{};
    CHECK(as_two_mode(NormalizedState{p}).terms().size() == 1);
}
