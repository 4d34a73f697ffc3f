// SPDX-License-Identifier: Apache-2.0
//
// Acceptance criteria, one PASS/FAIL line each. With a criterion number as
// the only argument just that criterion runs; ctest registers them one by
// one. Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "bcross/alpha.hpp"
#include "bcross/crosszeros.hpp"
#include "bcross/pleijel.hpp"
#include "bcross/specfun.hpp"
#include "bcross/willis.hpp"

using namespace bcross;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome table_one() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<double, double>> table = {
        {1.05, 0.636367}, {1.1, 0.635656}, {1.5, 0.619308}, {2.0, 0.58654},
        {4.0, 0.492055},  {6.0, 0.474482}, {10.0, 0.465961},
    };
    double worst = 0.0;
    double worst_R = 0.0;
    std::string values;
    for (const auto& [R, expected] : table) {
        const double v = pleijel_estimate(R).pleijel_value;
        values += fmt(" %g:%.6f", R, v);
        if (std::abs(v - expected) > worst) {
            worst = std::abs(v - expected);
            worst_R = R;
        }
    }
    const double t = seconds_since(t0);
    return {worst <= 5e-4 && t < 60.0,
            fmt("max |dev| %.3g at R=%g (limit 5e-4), %.2fs (limit 60s);", worst, worst_R, t) + values};
}

Outcome half_integer() {
    double worst = 0.0;
    for (double R : {1.5, 2.0, 4.0}) {
        for (int k = 1; k <= 50; ++k) {
            const double exact = pi * k / (R - 1.0);
            worst = std::max(worst, std::abs(zero(0.5, R, k).value - exact) / exact);
        }
    }
    return {worst <= 1e-10, fmt("max relative error %.3g (limit 1e-10) over 150 zeros", worst)};
}

Outcome bound_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    double lower = INFINITY, upper = INFINITY, radial = INFINITY, identity = 0.0;
    int count = 0;
    for (double nu : {0.0, 0.5, 1.0, 2.5, 5.0, 10.3}) {
        for (double R : {1.1, 1.5, 2.0, 4.0}) {
            for (int k = 1; k <= 20; ++k) {
                const BoundReport b = check_bounds(nu, R, k);
                ++count;
                upper = std::min(upper, b.upper_margin);
                if (nu == 0.0) {
                    radial = std::min(radial, b.radial_margin);
                    identity = std::max(identity, std::abs(b.lower_margin));
                } else {
                    lower = std::min(lower, b.lower_margin);
                }
            }
        }
    }
    const double t = seconds_since(t0);
    const bool ok = lower > 0.0 && upper > 0.0 && radial > 0.0 && identity <= kDefaultZeroTol && t < 120.0;
    return {ok, fmt("%d cases; min margins lower %.3g upper %.3g radial %.3g; nu=0 lower identity |gap| %.3g "
                    "(limit 1e-10); %.2fs (limit 120s)",
                    count, lower, upper, radial, identity, t)};
}

// Central difference in nu; one Richardson step if the plain difference
// misses the target.
double fd_derivative(double nu, double R, int k, double target, double reference) {
    auto central = [&](double h) {
        return (zero(nu + h, R, k, 1e-14).value - zero(nu - h, R, k, 1e-14).value) / (2.0 * h);
    };
    const double h = 1e-5 * std::max(1.0, nu);
    const double d1 = central(h);
    if (std::abs(d1 - reference) <= target * std::abs(d1)) return d1;
    return (4.0 * central(h / 2) - d1) / 3.0;
}

Outcome willis() {
    double worst = 0.0;
    for (double nu : {0.3, 1.0, 2.5, 7.0}) {
        for (double R : {1.5, 2.0, 4.0}) {
            for (int k : {1, 3, 10}) {
                const double d = willis_derivative(nu, R, zero(nu, R, k).value);
                const double fd = fd_derivative(nu, R, k, 1e-5, d);
                worst = std::max(worst, std::abs(d - fd) / std::abs(fd));
            }
        }
    }
    return {worst <= 1e-5, fmt("max relative deviation %.3g (limit 1e-5) over 36 cases", worst)};
}

Outcome identities() {
    double wronskian = 0.0;
    for (double nu : {0.0, 0.3, 1.0, 2.7, 10.0, 50.5}) {
        for (double x : {0.1, 1.0, 7.5, 40.0, 200.0, 3000.0}) {
            if (nu > 20.0 && x < 5.0) continue;
            const BesselJY v = bessel_jy(nu, x);
            const double expected = 2.0 / (pi * x);
            wronskian = std::max(wronskian, std::abs(v.j * v.yp - v.jp * v.y - expected) / expected);
        }
    }
    const QuadratureConfig quad;
    double nicholson = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 3.0, 8.0}) {
        for (double dx : {0.25, 1.0, 5.0, 30.0}) {
            nicholson = std::max(nicholson, nicholson_check(nu, nu + dx, quad));
        }
    }
    double watson = 0.0;
    for (double a : {-0.95, -0.5, 0.0, 0.3, 0.9}) {
        const auto r = integrate_semi_infinite(
            [a](double u) { return bessel_k0_scaled(u) * std::exp(-(1.0 + a) * u); }, quad);
        watson = std::max(watson, std::abs(r.value - watson_laplace(a)) / watson_laplace(a));
    }
    const bool ok = wronskian <= 1e-10 && nicholson <= 1e-8 && watson <= 1e-10;
    return {ok, fmt("wronskian %.3g (limit 1e-10), nicholson %.3g (limit 1e-8), watson %.3g (limit 1e-10)",
                    wronskian, nicholson, watson)};
}

Outcome convergence() {
    const double R = 2.0;
    bool ok = true;
    std::string detail;
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        const double target = alpha_transcendental(R, x);
        const double e8 = std::abs(zero(8 * x, R, 8).value / 8 - target);
        const double e64 = std::abs(zero(64 * x, R, 64).value / 64 - target);
        ok = ok && e64 < e8;
        detail += fmt("x=%g: %.3g -> %.3g; ", x, e8, e64);
    }
    // x = 0: k |a_{0,k} - pi k/(R-1)| must not grow as k doubles.
    std::vector<double> products;
    for (int k = 8; k <= 128; k *= 2) {
        products.push_back(k * std::abs(zero(0.0, R, k).value - pi * k / (R - 1.0)));
    }
    const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
    const bool bounded = *hi <= 1.5 * products.front() && *lo > 0.0;
    ok = ok && bounded;
    detail += fmt("McMahon k*dev in [%.4g, %.4g] for k=8..128 (limit 1.5x k=8 value)", *lo, *hi);
    return {ok, detail};
}

Outcome dual_alpha() {
    double worst = 0.0, corner = 0.0;
    for (double R : {1.1, 1.5, 2.0, 4.0, 10.0}) {
        const AlphaCurve c = solve_ivp(R, default_alpha_x_max(R));
        for (int i = 1; i <= 20; ++i) {
            const double x = c.x_max() * i / 20.5;
            worst = std::max(worst, std::abs(c(x) - alpha_transcendental(R, x)));
        }
        corner = std::max(corner, std::abs(c.x0() - corner_x0(R)));
    }
    return {worst <= 1e-6 && corner <= 1e-7,
            fmt("max |ode - transcendental| %.3g (limit 1e-6), max corner error %.3g (limit 1e-7)", worst,
                corner)};
}

Outcome nodal() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto series = nodal_ratio_series(2.0, 19000, 19500);
    double worst = 0.0;
    int at = 0;
    bool courant = true;
    for (const auto& [k, r] : series) {
        courant = courant && r <= 1.0;
        if (r > worst) {
            worst = r;
            at = k;
        }
    }
    const double t = seconds_since(t0);
    const bool ok = courant && worst >= 0.5 && worst <= 0.69166 && t < 600.0;
    return {ok, fmt("window [19000, 19500]: all ratios <= 1: %s; max %.6f at k=%d (band [0.5, 0.69166]); %.2fs "
                    "(limit 600s)",
                    courant ? "yes" : "no", worst, at, t)};
}

Outcome sandwich() {
    bool ok = true;
    std::string detail;
    for (double R : {1.05, 10.0}) {
        const double v = pleijel_estimate(R).pleijel_value;
        ok = ok && v > kPleijelDisk && v < 0.6366198;
        detail += fmt("R=%g: %.7f; ", R, v);
    }
    return {ok, detail + "band (0.4613019, 0.6366198)"};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "Pleijel table reproduction", table_one},
        {2, "half-integer zeros exact", half_integer},
        {3, "zero bound suite", bound_suite},
        {4, "Willis derivative vs finite differences", willis},
        {5, "Wronskian, Nicholson and Watson identities", identities},
        {6, "scaled zeros converge to alpha, McMahon rate", convergence},
        {7, "ODE and transcendental alpha agree", dual_alpha},
        {8, "nodal ratio window", nodal},
        {9, "Pleijel values between disk and rectangle", sandwich},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
