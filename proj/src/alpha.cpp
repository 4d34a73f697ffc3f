// SPDX-License-Identifier: Apache-2.0
#include "bcross/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "bcross/errors.hpp"
#include "bcross/willis.hpp"

namespace bcross {

namespace {

constexpr double kPi = std::numbers::pi;

void require_R(double R, const char* who) {
    if (!(R > 1.0) || !std::isfinite(R)) {
        throw DomainError(std::string(who) + ": R must be finite and > 1");
    }
}

double initial_alpha(double R) { return kPi / (R - 1.0); }

// Dormand-Prince 5(4) tableau.
namespace dp {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b*, the embedded 4th-order difference.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace dp

struct StepResult {
    double y;
    double err;
};

class AlphaStepper {
public:
    explicit AlphaStepper(double R) : R_(R) {}

    double field(double x, double y) const { return f_limit({x, y, R_}); }

    StepResult step(double x, double y, double h) const {
        using namespace dp;
        const double k1 = field(x, y);
        const double k2 = field(x + c2 * h, y + h * a21 * k1);
        const double k3 = field(x + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const double k4 = field(x + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = field(x + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 = field(x + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double yn = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = field(x + h, yn);
        const double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        return {yn, std::abs(err)};
    }

private:
    double R_;
};

void check_sandwich(double R, double x, double a, double slack) {
    if (x <= 0.0) return;
    const AlphaBounds b = alpha_bounds(R, x);
    if (!(a > b.lower - slack) || !(a < b.upper_iota + slack)) {
        throw InvariantError("solve_ivp: alpha(" + std::to_string(x) + ") = " + std::to_string(a) +
                             " outside the sandwich [" + std::to_string(b.lower) + ", " +
                             std::to_string(b.upper_iota) + "]");
    }
}

template <class F>
double bracketed_root(F f, double lo, double hi, double tol, const char* who) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw ConvergenceError(std::string(who) + ": no sign change in bracket");
    }
    auto done = [tol](double a, double b) {
        return b - a <= std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(b));
    };
    std::uintmax_t iters = 300;
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, iters);
    return 0.5 * (a + b);
}

}  // namespace

std::string to_string(AlphaMethod m) {
    return m == AlphaMethod::ode ? "ode" : "transcendental";
}

struct AlphaCurve::Interp {
    std::optional<boost::math::interpolators::cubic_hermite<std::vector<double>>> spline;
};

namespace {

// Node slopes from the field, limited so each cubic piece is monotone.
std::vector<double> monotone_slopes(double R, const std::vector<AlphaSample>& s) {
    const std::size_t n = s.size();
    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        secant[i] = (s[i + 1].alpha - s[i].alpha) / (s[i + 1].x - s[i].x);
    }
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        double slope = f_limit({s[i].x, s[i].alpha, R});
        const double left = i > 0 ? secant[i - 1] : secant[0];
        const double right = i + 1 < n ? secant[i] : secant[n - 2];
        if (left <= 0.0 || right <= 0.0) {
            slope = 0.0;
        } else {
            slope = std::clamp(slope, 0.0, 3.0 * std::min(left, right));
        }
        d[i] = slope;
    }
    return d;
}

}  // namespace

AlphaCurve::AlphaCurve(double R, std::vector<AlphaSample> samples, double x0, double tol,
                       AlphaMethod method)
    : R_(R), samples_(std::move(samples)), x0_(x0), tol_(tol), method_(method) {
    if (samples_.empty()) throw DomainError("AlphaCurve: needs at least one sample");
    auto interp = std::make_shared<Interp>();
    if (samples_.size() >= 2) {
        auto dydx = monotone_slopes(R_, samples_);
        std::vector<double> xs, ys;
        xs.reserve(samples_.size());
        ys.reserve(samples_.size());
        for (const auto& s : samples_) {
            xs.push_back(s.x);
            ys.push_back(s.alpha);
        }
        interp->spline.emplace(std::move(xs), std::move(ys), std::move(dydx));
    }
    interp_ = std::move(interp);
}

double AlphaCurve::operator()(double x) const {
    if (!(x >= samples_.front().x) || !(x <= samples_.back().x)) {
        throw DomainError("AlphaCurve: x outside the sampled range");
    }
    if (interp_->spline) return (*interp_->spline)(x);
    auto it = std::lower_bound(samples_.begin(), samples_.end(), x,
                               [](const AlphaSample& s, double v) { return s.x < v; });
    if (it == samples_.begin()) return it->alpha;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    return lo.alpha + (hi.alpha - lo.alpha) * (x - lo.x) / (hi.x - lo.x);
}

double corner_x0(double R) {
    require_R(R, "corner_x0");
    return kPi / (std::sqrt((R - 1.0) * (R + 1.0)) - std::acos(1.0 / R));
}

double default_alpha_x_max(double R) {
    return std::max(4.0 * corner_x0(R), 20.0);
}

AlphaCurve solve_ivp(double R, double x_max, double tol) {
    require_R(R, "solve_ivp");
    if (!(x_max >= 0.0) || !std::isfinite(x_max)) throw DomainError("solve_ivp: x_max must be >= 0");
    if (!(tol > 0.0)) throw DomainError("solve_ivp: tol must be positive");

    const double formula_x0 = corner_x0(R);
    std::vector<AlphaSample> samples{{0.0, initial_alpha(R)}};
    if (x_max == 0.0) return AlphaCurve(R, std::move(samples), formula_x0, tol, AlphaMethod::ode);

    const AlphaStepper stepper(R);
    // Error per step is held well below tol so the accumulated error
    // stays within a small multiple of it.
    const double local_tol = 0.005 * tol;
    const double h_max = x_max / 2000.0;
    const double slack = 10.0 * tol;

    double x = 0.0;
    double y = initial_alpha(R);
    double h = std::min(h_max, 1e-3);
    bool above = true;
    double detected_x0 = formula_x0;

    while (x < x_max) {
        h = std::min(h, x_max - x);
        if (h < 1e-14 * std::max(1.0, x)) {
            throw ConvergenceError("solve_ivp: step size underflow at x = " + std::to_string(x));
        }
        const StepResult s = stepper.step(x, y, h);
        const double ratio = s.err / local_tol;
        if (ratio <= 1.0) {
            double xn = x + h;
            double yn = s.y;
            bool crossed = false;
            if (above && yn - xn <= 0.0) {
                // Diagonal crossing: find the step length that lands on it.
                auto g = [&](double hh) { return stepper.step(x, y, hh).y - (x + hh); };
                const double hh = bracketed_root(g, 0.0, h, 1e-3 * tol, "solve_ivp event");
                xn = x + hh;
                yn = xn;
                detected_x0 = xn;
                above = false;
                crossed = true;
            }
            x = xn;
            y = yn;
            check_sandwich(R, x, y, slack);
            if (above ? !(y > x - slack) : !(y < x + slack)) {
                throw InvariantError("solve_ivp: alpha on the wrong side of the diagonal");
            }
            samples.push_back({x, y});
            if (crossed) {
                // Restart below the diagonal with a fresh small step.
                h = std::min(h_max, std::max(1e-6, 1e-3 * h_max));
                continue;
            }
        }
        const double factor = (s.err == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        h = std::min(h * factor, h_max);
    }
    return AlphaCurve(R, std::move(samples), detected_x0, tol, AlphaMethod::ode);
}

double alpha_transcendental(double R, double x, double tol) {
    require_R(R, "alpha_transcendental");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("alpha_transcendental: x must be >= 0");
    if (x == 0.0) return initial_alpha(R);

    const double x0 = corner_x0(R);
    const AlphaBounds b = alpha_bounds(R, x);
    auto outer = [R, x](double a) {
        const double s = x / (R * a);
        return std::sqrt(std::max(0.0, R * R * a * a - x * x)) - x * std::acos(std::min(1.0, s));
    };
    if (x < x0) {
        auto eq = [&](double a) {
            const double t = std::min(1.0, x / a);
            return outer(a) - std::sqrt(std::max(0.0, a * a - x * x)) + x * std::acos(t) - kPi;
        };
        const double lo = std::max(x, b.lower);
        const double hi = b.upper_linear * (1.0 + 1e-12);
        return bracketed_root(eq, lo, hi, tol, "alpha_transcendental (above diagonal)");
    }
    const double c = x0 * std::sqrt((R - 1.0) * (R + 1.0)) - x0 * std::acos(1.0 / R);
    auto eq = [&](double a) { return outer(a) - c; };
    const double lo = std::max(x / R, b.lower);
    const double hi = std::min(x, b.upper_linear);
    return bracketed_root(eq, lo, hi, tol, "alpha_transcendental (below diagonal)");
}

AlphaCurve alpha_curve_transcendental(double R, double x_max, int intervals, double tol) {
    require_R(R, "alpha_curve_transcendental");
    if (!(x_max >= 0.0)) throw DomainError("alpha_curve_transcendental: x_max must be >= 0");
    if (intervals < 1) throw DomainError("alpha_curve_transcendental: intervals must be >= 1");
    const double x0 = corner_x0(R);
    std::vector<AlphaSample> samples{{0.0, initial_alpha(R)}};
    if (x_max > 0.0) {
        bool inserted = false;
        for (int i = 1; i <= intervals; ++i) {
            const double x = x_max * i / intervals;
            if (!inserted && x0 < x && x0 > samples.back().x) {
                samples.push_back({x0, alpha_transcendental(R, x0, tol)});
                inserted = true;
            }
            samples.push_back({x, alpha_transcendental(R, x, tol)});
        }
    }
    return AlphaCurve(R, std::move(samples), x0, tol, AlphaMethod::transcendental);
}

double tilde_iota(double R, double x) {
    require_R(R, "tilde_iota");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("tilde_iota: x must be >= 0");
    if (x == 0.0) return kPi * R / (R - 1.0);
    const double rhs = kPi * R / ((R - 1.0) * x);
    // Left side decreases from +inf at 0 to 0 at pi/2.
    auto eq = [rhs](double th) { return 1.0 / std::tan(th) - (0.5 * kPi - th) - rhs; };
    const double lo = 1.0 / (rhs + 3.0);
    const double hi = 0.5 * kPi;
    const double theta = bracketed_root(eq, lo, hi, 0.0, "tilde_iota");
    return x / std::sin(theta);
}

AlphaBounds alpha_bounds(double R, double x) {
    require_R(R, "alpha_bounds");
    if (!(x > 0.0)) throw DomainError("alpha_bounds: x must be > 0");
    const double a0 = initial_alpha(R);
    AlphaBounds b;
    b.lower = std::sqrt(a0 * a0 + x * x / (R * R));
    b.upper_iota = tilde_iota(R, x) / R;
    b.upper_linear = a0 + kPi * x / (2.0 * R);
    return b;
}

}  // namespace bcross
