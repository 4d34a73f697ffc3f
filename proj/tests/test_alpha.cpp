// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bcross/alpha.hpp"
#include "bcross/crosszeros.hpp"
#include "bcross/errors.hpp"
#include "bcross/willis.hpp"

using namespace bcross;
using std::numbers::pi;

TEST_CASE("corner_x0") {
    CHECK(corner_x0(2.0) == doctest::Approx(pi / (std::sqrt(3.0) - pi / 3)).epsilon(1e-15));
    CHECK(corner_x0(2.0) == doctest::Approx(4.5872493477377205134).epsilon(1e-14));
    CHECK(corner_x0(1.001) > 60.0);
    CHECK(corner_x0(100.0) < 0.033);
    CHECK_THROWS_AS(corner_x0(1.0), DomainError);
}

TEST_CASE("solve_ivp on R = 2") {
    const double tol = 1e-8;
    const AlphaCurve c = solve_ivp(2.0, 10.0, tol);
    CHECK(c.samples().front().x == 0.0);
    CHECK(c.samples().front().alpha == pi);
    CHECK(c(0.0) == pi);
    CHECK(std::abs(c.x0() - corner_x0(2.0)) <= 10 * tol);
    CHECK(c.method() == AlphaMethod::ode);
    for (double x : {0.5, 2.0, corner_x0(2.0), 6.0, 9.0}) {
        CHECK(std::abs(c(x) - alpha_transcendental(2.0, x)) <= 1e-6);
    }
}

TEST_CASE("solve_ivp with x_max = 0 gives the initial point only") {
    const AlphaCurve c = solve_ivp(3.0, 0.0);
    REQUIRE(c.samples().size() == 1);
    CHECK(c.samples()[0].alpha == doctest::Approx(pi / 2.0));
    CHECK_THROWS_AS(solve_ivp(2.0, -1.0), DomainError);
    CHECK_THROWS_AS(solve_ivp(0.9, 1.0), DomainError);
}

TEST_CASE("sample invariants: monotone, sandwiched, corner side") {
    for (double R : {1.1, 1.5, 2.0, 4.0, 10.0}) {
        const AlphaCurve c = solve_ivp(R, default_alpha_x_max(R));
        const double slack = 10.0 * c.tol();
        const auto& s = c.samples();
        for (std::size_t i = 1; i < s.size(); ++i) {
            INFO("R=" << R << " x=" << s[i].x);
            CHECK(s[i].x > s[i - 1].x);
            CHECK(s[i].alpha > s[i - 1].alpha);
            const AlphaBounds b = alpha_bounds(R, s[i].x);
            CHECK(s[i].alpha > b.lower - slack);
            CHECK(s[i].alpha < b.upper_iota + slack);
            if (s[i].x < c.x0() - slack) CHECK(s[i].alpha > s[i].x);
            if (s[i].x > c.x0() + slack) CHECK(s[i].alpha < s[i].x);
        }
        CHECK(std::abs(c(c.x0()) - c.x0()) <= slack);
    }
}

TEST_CASE("ODE and transcendental solutions agree to 10 tol") {
    for (double R : {1.1, 1.5, 2.0, 4.0, 10.0}) {
        const AlphaCurve c = solve_ivp(R, default_alpha_x_max(R));
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = c.x_max() * (i + 0.5) / 20.0;
            worst = std::max(worst, std::abs(c(x) - alpha_transcendental(R, x)));
        }
        INFO("R=" << R << " worst=" << worst);
        CHECK(worst <= 10.0 * c.tol());
        CHECK(std::abs(c.x0() - corner_x0(R)) <= 10.0 * c.tol());
    }
}

TEST_CASE("sample slopes follow the field") {
    for (double R : {1.5, 2.0, 4.0}) {
        const AlphaCurve c = solve_ivp(R, default_alpha_x_max(R));
        const auto& s = c.samples();
        // The field's x-derivative has a square-root singularity at the
        // corner, so steps right next to it are checked by increment only.
        const double window = 0.01 * std::max(1.0, c.x0());
        double worst = 0.0;
        double worst_increment = 0.0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            const double a = s[i - 1].x;
            const double b = s[i].x;
            const double m = 0.5 * (a + b);
            const double secant = (s[i].alpha - s[i - 1].alpha) / (b - a);
            // Simpson average of the field over the step equals the secant
            // to fourth order.
            const double field = (f_limit({a, s[i - 1].alpha, R}) + 4.0 * f_limit({m, c(m), R}) +
                                  f_limit({b, s[i].alpha, R})) / 6.0;
            worst_increment = std::max(worst_increment, std::abs(secant - field) * (b - a));
            if (std::abs(m - c.x0()) > window) worst = std::max(worst, std::abs(secant - field));
            if (a > c.x0()) {
                CHECK(secant > 1.0 / R);
                CHECK(secant < 1.0);
            }
        }
        INFO("R=" << R);
        CHECK(worst <= 100.0 * c.tol());
        CHECK(worst_increment <= c.tol());
    }
}

TEST_CASE("interpolated curve is monotone") {
    const AlphaCurve c = solve_ivp(1.5, default_alpha_x_max(1.5));
    double prev = c(0.0);
    for (int i = 1; i <= 20000; ++i) {
        const double v = c(c.x_max() * i / 20000.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("transcendental curve") {
    CHECK(alpha_transcendental(2.0, 0.0) == pi);
    CHECK(alpha_transcendental(5.0, 0.0) == pi / 4.0);
    const double x0 = corner_x0(2.0);
    CHECK(alpha_transcendental(2.0, x0) == doctest::Approx(x0).epsilon(1e-12));
    CHECK(alpha_transcendental(2.0, x0 * (1 - 1e-9)) ==
          doctest::Approx(alpha_transcendental(2.0, x0 * (1 + 1e-9))).epsilon(1e-7));
    const double far = alpha_transcendental(2.0, 100.0);
    CHECK(far > std::sqrt(pi * pi + 2500.0));
    CHECK(far < pi + 100.0 * pi / 4.0);

    const AlphaCurve c = alpha_curve_transcendental(2.0, 10.0);
    CHECK(c.method() == AlphaMethod::transcendental);
    CHECK(c.x0() == doctest::Approx(x0));
    CHECK(c(3.3) == doctest::Approx(alpha_transcendental(2.0, 3.3)).epsilon(1e-9));
}

TEST_CASE("tilde_iota") {
    CHECK(tilde_iota(2.0, 0.0) == doctest::Approx(2.0 * pi));
    for (double R : {1.2, 2.0, 5.0}) {
        double prev = tilde_iota(R, 0.0);
        double prev_slope = 1e300;
        const double h = 0.25;
        for (double x = h; x < 40.0; x += h) {
            const double v = tilde_iota(R, x);
            CHECK(v <= pi * R / (R - 1.0) + pi * x / 2.0);
            CHECK(v > prev);
            const double slope = (v - prev) / h;
            CHECK(slope <= prev_slope + 1e-9);
            prev_slope = slope;
            prev = v;
        }
    }
    CHECK(std::abs(tilde_iota(2.0, 1e4) / 1e4 - 1.0) < 1e-2);
}

TEST_CASE("alpha_bounds") {
    const AlphaBounds b = alpha_bounds(2.0, 1.0);
    CHECK(b.lower == doctest::Approx(std::sqrt(pi * pi + 0.25)));
    CHECK(b.upper_linear == doctest::Approx(pi + pi / 4));
    for (double R : {1.1, 2.0, 10.0}) {
        for (double x : {0.01, 0.5, 3.0, 50.0}) {
            const AlphaBounds q = alpha_bounds(R, x);
            CHECK(q.lower < q.upper_iota);
            CHECK(q.upper_iota <= q.upper_linear);
        }
    }
    const AlphaBounds c = alpha_bounds(2.0, 4.5872);
    CHECK(c.lower < 4.5872);
    CHECK(4.5872 < c.upper_linear);
}

TEST_CASE("scaled zeros approach alpha") {
    const double R = 2.0;
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        const double target = alpha_transcendental(R, x);
        const double e8 = std::abs(zero(8 * x, R, 8).value / 8 - target);
        const double e64 = std::abs(zero(64 * x, R, 64).value / 64 - target);
        INFO("x=" << x);
        CHECK(e64 < e8);
    }
}
