#include "oracles.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/sensitivity.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace subplanck;

TEST_CASE("equal-shift quadrature overlap matches the exact Gaussian integrals") {
    oracle::Gen gen(7);
    for (int i = 0; i < 25; ++i) {
        const StateParams p = gen.state();
        const NormalizedState st(p);
        const double s = gen.uniform(-0.6, 0.6);
        CHECK(equal_shift_overlap_numeric(st, s) == doctest::Approx(oracle::equal_shift_overlap(s, p)).epsilon(1e-9));
    }
}

TEST_CASE("compass quadrature overlap matches the exact Gaussian integrals") {
    oracle::Gen gen(8);
    for (int i = 0; i < 25; ++i) {
        const StateParams p = gen.state();
        const double s = gen.uniform(-0.8, 0.8);
        CHECK(compass_overlap_numeric(p, s) == doctest::Approx(oracle::compass_overlap(s, p)).epsilon(1e-9));
    }
}

TEST_CASE("overlap at zero displacement is one") {
    oracle::Gen gen(9);
    for (int i = 0; i < 10; ++i) {
        const NormalizedState st(gen.state());
        CHECK(overlap_displaced_numeric(st, {}) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("overlap stays in [0, 1] and is even under a full reversal") {
    oracle::Gen gen(10);
    for (int i = 0; i < 20; ++i) {
        const NormalizedState st(gen.state());
        const Displacement d{complex{gen.uniform(-1, 1), gen.uniform(-1, 1)},
                             complex{gen.uniform(-1, 1), gen.uniform(-1, 1)}};
        const double f = overlap_displaced_numeric(st, d);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        CHECK(overlap_displaced_numeric(st, {-d.alpha, -d.beta}) == doctest::Approx(f).epsilon(1e-9));
    }
}

TEST_CASE("real states are even under reversing the momentum kicks") {
    oracle::Gen gen(11);
    for (int i = 0; i < 10; ++i) {
        StateParams p = gen.state();
        p.A = std::abs(p.A);
        p.B = -std::abs(p.B);
        const NormalizedState st(p);
        const Displacement d{complex{gen.uniform(-1, 1), gen.uniform(-1, 1)},
                             complex{gen.uniform(-1, 1), gen.uniform(-1, 1)}};
        CHECK(overlap_displaced_numeric(st, {std::conj(d.alpha), std::conj(d.beta)}) ==
              doctest::Approx(overlap_displaced_numeric(st, d)).epsilon(1e-9));
    }
}

TEST_CASE("product states factorize the overlap") {
    StateParams p;
    p.B = complex{};
    const NormalizedState st(p);
    const double s1 = 0.11;
    const double s2 = 0.27;
    const double k1 = 2.0 * s1 / p.delta;
    const double k2 = 2.0 * s2 / p.delta;
    const double exact = std::pow(oracle::f_psi_psi(k1, p) * oracle::f_phi_phi(k2, p), 2);
    CHECK(overlap_displaced_numeric(st, {complex{0, s1}, complex{0, s2}}) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("orthogonality at the first equal-shift minimum") {
    const NormalizedState st{StateParams{}};
    const double s_star = std::numbers::pi / 20.0;
    CHECK(equal_shift_overlap_numeric(st, s_star) < 1e-6);
    CHECK(oracle::equal_shift_overlap(s_star, st.params()) < 1e-6);
}

TEST_CASE("closed forms") {
    const NormalizedState st{StateParams{}};
    const double x0 = st.params().x0;
    CHECK(equal_shift_overlap(st, 0.0) == doctest::Approx(1.0));
    CHECK(compass_overlap(0.0, x0) == doctest::Approx(2.0));
    for (double s : {0.0, 0.03, 0.1, 0.157, 0.2, 0.31}) {
        CHECK(equal_shift_overlap(st, s) == doctest::Approx(std::pow(std::cos(2.0 * x0 * s), 2)).epsilon(1e-12));
        CHECK(compass_overlap_normalized(s, x0) == doctest::Approx(std::pow(std::cos(x0 * s), 4)).epsilon(1e-12));
        CHECK(equal_shift_overlap_printed(st, s) / equal_shift_overlap_printed(st, 0.0) ==
              doctest::Approx(equal_shift_overlap(st, s)).epsilon(1e-12));
        const Displacement d{complex{0, s}, complex{0, s}};
        CHECK(overlap_printed(st, d) / overlap_printed(st, {}) ==
              doctest::Approx(std::pow(std::cos(2.0 * x0 * s), 2)).epsilon(1e-12));
    }
}

TEST_CASE("model periods and names") {
    const StateParams p;
    CHECK(overlap_period(OverlapModel::EntangledEqualShift, p) == doctest::Approx(std::numbers::pi / 10.0));
    CHECK(overlap_period(OverlapModel::ZurekCompass, p) == doctest::Approx(std::numbers::pi / 5.0));
    CHECK(to_string(OverlapModel::EntangledEqualShift) == "entangled");
    CHECK(to_string(OverlapModel::ZurekCompass) == "compass");
    CHECK(to_string(OverlapModel::NumericGeneral) == "numeric");
    CHECK(to_string(OverlapModel::NumericCompass) == "numeric-compass");
}

TEST_CASE("minimum finder") {
    OverlapCurve c;
    for (int i = 0; i <= 200; ++i) {
        const double s = 0.01 * i;
        c.shifts.push_back(s);
        c.overlaps.push_back((s - 0.7371) * (s - 0.7371) + 0.2);
    }
    CHECK(find_minimum_shift(c) == doctest::Approx(0.7371).epsilon(1e-12));

    OverlapCurve monotone;
    for (int i = 0; i <= 20; ++i) {
        monotone.shifts.push_back(i);
        monotone.overlaps.push_back(-i);
    }
    CHECK_THROWS_AS(find_minimum_shift(monotone), NoBracketError);

    const auto all = find_minima({0, 1, 2, 3, 4, 5, 6}, {1, 0, 1, 2, 1, 0.5, 1});
    CHECK(all.size() == 2);
}

TEST_CASE("sweep validation") {
    const NormalizedState st{StateParams{}};
    CHECK_THROWS_AS(sweep_overlap(OverlapModel::EntangledEqualShift, st, 0.0), InvalidArgument);
    CHECK_THROWS_AS(sweep_overlap(OverlapModel::EntangledEqualShift, st, 1.0, 2), InvalidArgument);
    StateParams flat;
    flat.x0 = 0.0;
    CHECK_THROWS_AS(sweep_overlap(OverlapModel::EntangledEqualShift, NormalizedState{flat}, 1.0), InvalidArgument);
}

TEST_CASE("quadrature minima of the entangled and compass curves") {
    const NormalizedState st{StateParams{}};
    const double s_max = std::numbers::pi / st.params().x0;
    const double s_star = find_minimum_shift(sweep_overlap(OverlapModel::NumericGeneral, st, s_max));
    const double s1_star = find_minimum_shift(sweep_overlap(OverlapModel::NumericCompass, st, s_max));
    CHECK(std::abs(s_star - std::numbers::pi / 20.0) < 1e-4);
    CHECK(std::abs(s1_star - std::numbers::pi / 10.0) < 1e-4);
    CHECK(std::abs(s_star / s1_star - 0.5) < 1e-3);

    const double closed = find_minimum_shift(sweep_overlap(OverlapModel::EntangledEqualShift, st, s_max));
    CHECK(closed == doctest::Approx(std::numbers::pi / 20.0).epsilon(1e-9));
}

TEST_CASE("resolution guard") {
    const NormalizedState st{StateParams{}};
    CHECK_THROWS_AS(equal_shift_overlap_numeric(st, 0.1, {.nodes = 16}), ResolutionError);
}
