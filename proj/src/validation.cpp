// SPDX-License-Identifier: Apache-2.0
#include "bcross/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>

#include "bcross/alpha.hpp"
#include "bcross/crosszeros.hpp"
#include "bcross/specfun.hpp"
#include "bcross/willis.hpp"

namespace bcross {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

Check at_most(std::string suite, std::string name, double measured, double limit) {
    const bool ok = std::isfinite(measured) && measured <= limit;
    return {std::move(suite), std::move(name), measured, limit, limit - measured, ok};
}

Check above(std::string suite, std::string name, double measured, double limit) {
    const bool ok = std::isfinite(measured) && measured > limit;
    return {std::move(suite), std::move(name), measured, limit, measured - limit, ok};
}

void identities(std::vector<Check>& out) {
    const std::string s = "identities";

    double wronskian = 0.0;
    for (double nu : {0.0, 0.3, 1.0, 2.5, 10.0, 50.5}) {
        for (double x : {0.1, 1.0, 5.0, 30.0, 100.0, 1000.0}) {
            if (nu > 20.0 && x < 5.0) continue;  // Y overflows
            const BesselJY v = bessel_jy(nu, x);
            const double expected = 2.0 / (kPi * x);
            wronskian = std::max(wronskian, std::abs(v.j * v.yp - v.jp * v.y - expected) / expected);
        }
    }
    out.push_back(at_most(s, "wronskian max relative error", wronskian, 1e-10));

    const QuadratureConfig quad;
    double nicholson = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 2.5, 7.0}) {
        for (double dx : {0.5, 2.0, 10.0, 40.0}) {
            nicholson = std::max(nicholson, nicholson_check(nu, nu + dx, quad));
        }
    }
    out.push_back(at_most(s, "nicholson max relative error", nicholson, 1e-8));

    double watson = 0.0;
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        const auto r = integrate_semi_infinite(
            [a](double u) { return bessel_k0_scaled(u) * std::exp(-(1.0 + a) * u); }, quad);
        const double exact = watson_laplace(a);
        watson = std::max(watson, std::abs(r.value - exact) / exact);
    }
    out.push_back(at_most(s, "watson quadrature vs closed form", watson, 1e-10));

    double half = 0.0;
    for (double R : {1.5, 2.0, 4.0}) {
        for (int k = 1; k <= 50; ++k) {
            const double exact = kPi * k / (R - 1.0);
            half = std::max(half, std::abs(zero(0.5, R, k).value - exact) / exact);
        }
    }
    out.push_back(at_most(s, "half-integer zeros vs pi k/(R-1)", half, 1e-10));
}

void bounds(std::vector<Check>& out) {
    const std::string s = "bounds";
    const std::vector<double> nus = {0.0, 0.5, 1.0, 2.5, 5.0, 10.3};
    const std::vector<double> Rs = {1.1, 1.5, 2.0, 4.0};
    constexpr int kMax = 20;

    struct Cell {
        double lower = INFINITY, upper = INFINITY, radial = INFINITY;
    };
    std::vector<Cell> cells(nus.size() * Rs.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t c = 0; c < cells.size(); ++c) {
        try {
            const double nu = nus[c / Rs.size()];
            const double R = Rs[c % Rs.size()];
            for (int k = 1; k <= kMax; ++k) {
                const BoundReport b = check_bounds(nu, R, k);
                cells[c].lower = std::min(cells[c].lower, b.lower_margin);
                cells[c].upper = std::min(cells[c].upper, b.upper_margin);
                cells[c].radial = std::min(cells[c].radial, b.radial_margin);
            }
        } catch (...) {
#pragma omp critical(bcross_validation_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t c = 0; c < cells.size(); ++c) {
        const double nu = nus[c / Rs.size()];
        const double R = Rs[c % Rs.size()];
        const std::string tag = fmt("nu=%g R=%g", nu, R);
        if (nu == 0.0) {
            // The lower bound is an identity at nu = 0.
            out.push_back(at_most(s, "lower bound identity |margin| " + tag, std::abs(cells[c].lower),
                                  kDefaultZeroTol));
        } else {
            out.push_back(above(s, "lower bound min margin " + tag, cells[c].lower, 0.0));
        }
        out.push_back(above(s, "upper bound min margin " + tag, cells[c].upper, 0.0));
        if (nu == 0.0) {
            out.push_back(above(s, "radial bound min margin " + tag, cells[c].radial, 0.0));
        }
    }

    for (double R : {1.1, 2.0, 10.0}) {
        const AlphaCurve curve = solve_ivp(R, default_alpha_x_max(R));
        double worst = INFINITY;
        for (const auto& p : curve.samples()) {
            if (p.x == 0.0) continue;
            const AlphaBounds b = alpha_bounds(R, p.x);
            worst = std::min({worst, p.alpha - b.lower, b.upper_iota - p.alpha});
        }
        out.push_back(above(s, fmt("alpha sandwich min margin R=%g", R), worst, 0.0));
    }
}

void convergence(std::vector<Check>& out) {
    const std::string s = "convergence";
    const double R = 2.0;
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        const double target = alpha_transcendental(R, x);
        const double e8 = std::abs(zero(8 * x, R, 8).value / 8 - target);
        const double e64 = std::abs(zero(64 * x, R, 64).value / 64 - target);
        out.push_back(at_most(s, fmt("scaled zero error k=64 below k=8 x=%g", x), e64, e8));
    }

    for (double nu : {0.0, 1.0, 2.5}) {
        double prev = 0.0;
        double growth = 0.0;
        for (int k = 8; k <= 128; k *= 2) {
            const double p = k * std::abs(zero(nu, R, k).value - kPi * k / (R - 1.0));
            if (k > 8) growth = std::max(growth, p / prev);
            prev = p;
        }
        out.push_back(at_most(s, fmt("McMahon k*deviation growth per doubling nu=%g", nu), growth, 1.1));
    }

    for (double Rc : {1.1, 1.5, 2.0, 4.0, 10.0}) {
        const AlphaCurve curve = solve_ivp(Rc, default_alpha_x_max(Rc));
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = curve.x_max() * (i + 0.5) / 20.0;
            worst = std::max(worst, std::abs(curve(x) - alpha_transcendental(Rc, x)));
        }
        out.push_back(at_most(s, fmt("alpha ode vs transcendental R=%g", Rc), worst, 1e-6));
        out.push_back(at_most(s, fmt("alpha corner vs closed form R=%g", Rc),
                              std::abs(curve.x0() - corner_x0(Rc)), 1e-7));
    }

    double willis = 0.0;
    for (double nu : {0.3, 1.0, 2.5, 7.0}) {
        for (double Rw : {1.5, 2.0, 4.0}) {
            for (int k : {1, 3, 10}) {
                const double h = 1e-5 * std::max(1.0, nu);
                const double fd = (zero(nu + h, Rw, k, 1e-14).value - zero(nu - h, Rw, k, 1e-14).value) /
                                  (2.0 * h);
                const double d = willis_derivative(nu, Rw, zero(nu, Rw, k).value);
                willis = std::max(willis, std::abs(d - fd) / std::abs(fd));
            }
        }
    }
    out.push_back(at_most(s, "willis derivative vs finite difference", willis, 1e-5));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "identities") return Suite::identities;
    if (name == "bounds") return Suite::bounds;
    if (name == "convergence") return Suite::convergence;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::identities: return "identities";
        case Suite::bounds: return "bounds";
        case Suite::convergence: return "convergence";
        case Suite::all: return "all";
    }
    return "?";
}

std::vector<Check> run_suite(Suite suite) {
    std::vector<Check> out;
    if (suite == Suite::identities || suite == Suite::all) identities(out);
    if (suite == Suite::bounds || suite == Suite::all) bounds(out);
    if (suite == Suite::convergence || suite == Suite::all) convergence(out);
    return out;
}

}  // namespace bcross
