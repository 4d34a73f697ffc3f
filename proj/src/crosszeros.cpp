// SPDX-License-Identifier: Apache-2.0
#include "bcross/crosszeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "bcross/errors.hpp"
#include "bcross/specfun.hpp"

namespace bcross {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRefinements = 6;

void require_params(double nu, double R, const char* who) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw DomainError(std::string(who) + ": order must be finite and >= 0");
    }
    if (!(R > 1.0) || !std::isfinite(R)) {
        throw DomainError(std::string(who) + ": R must be finite and > 1");
    }
}

void require_tol(double tol, const char* who) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError(std::string(who) + ": tol must be positive");
    }
}

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

// Scan [lo, hi] on a uniform grid. `values` holds f at every grid point.
struct Scan {
    double lo;
    double step;
    std::vector<double> values;

    double point(std::size_t i) const { return lo + static_cast<double>(i) * step; }

    int sign_changes(std::size_t stride) const {
        int n = 0;
        for (std::size_t i = stride; i < values.size(); i += stride) {
            if (sign_of(values[i - stride]) != sign_of(values[i])) ++n;
        }
        return n;
    }

    // Halve the step; old points are reused at even indices.
    Scan refined(double nu, double R) const {
        Scan out{lo, 0.5 * step, {}};
        out.values.reserve(2 * values.size() - 1);
        for (std::size_t i = 0; i < values.size(); ++i) {
            out.values.push_back(values[i]);
            if (i + 1 < values.size()) {
                out.values.push_back(eval_cross(nu, R, out.point(2 * i + 1)));
            }
        }
        return out;
    }
};

Scan coarse_scan(double nu, double R, double lo, double hi) {
    const double max_step = kPi / (4.0 * (R - 1.0));
    const auto intervals = static_cast<std::size_t>(std::ceil((hi - lo) / max_step));
    Scan s{lo, (hi - lo) / static_cast<double>(std::max<std::size_t>(intervals, 1)), {}};
    s.values.reserve(intervals + 1);
    for (std::size_t i = 0; i <= std::max<std::size_t>(intervals, 1); ++i) {
        s.values.push_back(eval_cross(nu, R, s.point(i)));
    }
    return s;
}

CrossZero polish(double nu, double R, int k, double a, double b, double fa, double fb, double tol) {
    CrossZero z;
    z.nu = nu;
    z.R = R;
    z.k = k;
    if (fa == 0.0 || fb == 0.0) {
        const double v = (fa == 0.0) ? a : b;
        z.value = v;
        z.residual = 0.0;
        z.bracket = {std::nextafter(v, 0.0), std::nextafter(v, std::numeric_limits<double>::infinity())};
        return z;
    }
    auto f = [nu, R](double t) { return eval_cross(nu, R, t); };
    // Width can't go below a couple of ulps of the root.
    const double floor_width = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
    const double target = std::max(tol, floor_width);
    auto done = [target](double lo, double hi) { return hi - lo <= target; };
    std::uintmax_t iters = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, iters);
    if (!(hi - lo <= target)) {
        throw ConvergenceError("zero polishing did not shrink the bracket to tol");
    }
    z.bracket = {lo, hi};
    z.value = 0.5 * (lo + hi);
    z.residual = std::abs(f(z.value));
    return z;
}

double scan_start(double nu, double R, double radial_first_zero) {
    if (nu == 0.0) return kCrossZMin;
    // Nothing below the lower bound; back off slightly so the first zero
    // can't sit on the grid origin.
    const double lb = mccann_lower_bound(radial_first_zero, nu, R);
    return std::max(kCrossZMin, lb * (1.0 - 1e-8));
}

std::vector<CrossZero> scan_zeros(double nu, double R, double lo, double hi, double tol) {
    std::vector<CrossZero> out;
    if (!(hi > lo)) return out;

    Scan scan = coarse_scan(nu, R, lo, hi);
    Scan fine = scan.refined(nu, R);
    int refinements = 1;
    while (scan.sign_changes(1) != fine.sign_changes(1)) {
        if (refinements == kMaxRefinements) {
            throw ConvergenceError("zero scan: sign-change count does not stabilise under refinement");
        }
        scan = std::move(fine);
        fine = scan.refined(nu, R);
        ++refinements;
    }

    int k = 0;
    for (std::size_t i = 1; i < fine.values.size(); ++i) {
        const double fa = fine.values[i - 1];
        const double fb = fine.values[i];
        if (sign_of(fa) == sign_of(fb)) continue;
        out.push_back(polish(nu, R, ++k, fine.point(i - 1), fine.point(i), fa, fb, tol));
    }
    return out;
}

double first_radial_zero(double R, double tol) {
    const double hi = cross_zero_upper_bound(0.0, R, 1);
    auto zs = scan_zeros(0.0, R, kCrossZMin, hi, tol);
    if (zs.empty()) {
        throw ConvergenceError("no radial zero below pi/(R-1); evaluation defect");
    }
    return zs.front().value;
}

}  // namespace

double eval_cross(double nu, double R, double z) {
    require_params(nu, R, "eval_cross");
    if (!(z >= kCrossZMin) || !std::isfinite(z)) {
        throw DomainError("eval_cross: z must be finite and >= 1e-8");
    }
    const BesselJY inner = bessel_jy(nu, z);
    const BesselJY outer = bessel_jy(nu, R * z);
    const double v = outer.j * inner.y - inner.j * outer.y;
    if (!std::isfinite(v)) {
        throw DomainError("eval_cross: value out of double range at this (nu, z)");
    }
    return v;
}

double mccann_lower_bound(double radial_zero, double nu, double R) {
    return std::sqrt(radial_zero * radial_zero + nu * nu / (R * R));
}

double cross_zero_upper_bound(double nu, double R, int k) {
    return kPi * k / (R - 1.0) + kPi * nu / (2.0 * R);
}

std::vector<CrossZero> zeros_up_to(double nu, double R, double limit, double tol,
                                   double radial_first_zero) {
    require_params(nu, R, "zeros_up_to");
    require_tol(tol, "zeros_up_to");
    if (!(limit > 0.0) || !std::isfinite(limit)) {
        throw DomainError("zeros_up_to: limit must be finite and > 0");
    }
    const double lo = scan_start(nu, R, radial_first_zero);
    auto zs = scan_zeros(nu, R, lo, limit, tol);

    // Every k with upper bound <= limit must have been found.
    const double guaranteed = std::floor((limit - kPi * nu / (2.0 * R)) * (R - 1.0) / kPi);
    if (static_cast<double>(zs.size()) < guaranteed) {
        throw ConvergenceError("zeros_up_to: found " + std::to_string(zs.size()) +
                               " zeros but the upper bound guarantees " +
                               std::to_string(static_cast<long>(guaranteed)));
    }
    return zs;
}

std::vector<CrossZero> zeros_up_to(double nu, double R, double limit, double tol) {
    require_params(nu, R, "zeros_up_to");
    require_tol(tol, "zeros_up_to");
    const double a01 = (nu == 0.0) ? 0.0 : first_radial_zero(R, tol);
    return zeros_up_to(nu, R, limit, tol, a01);
}

CrossZero zero(double nu, double R, int k, double tol) {
    require_params(nu, R, "zero");
    require_tol(tol, "zero");
    if (k < 1) throw DomainError("zero: k must be >= 1");
    const double hi = cross_zero_upper_bound(nu, R, k);
    const double a01 = (nu == 0.0) ? 0.0 : first_radial_zero(R, tol);
    const double lo = scan_start(nu, R, a01);
    auto zs = scan_zeros(nu, R, lo, hi, tol);
    if (static_cast<int>(zs.size()) < k) {
        throw ConvergenceError("zero: only " + std::to_string(zs.size()) +
                               " sign changes below the upper bound for k = " + std::to_string(k));
    }
    return zs[static_cast<std::size_t>(k - 1)];
}

BoundReport check_bounds(double nu, double R, int k, double tol) {
    BoundReport r;
    r.nu = nu;
    r.R = R;
    r.k = k;
    r.zero = zero(nu, R, k, tol).value;
    r.radial_zero = (nu == 0.0) ? r.zero : zero(0.0, R, k, tol).value;
    r.lower = mccann_lower_bound(r.radial_zero, nu, R);
    r.lower_margin = r.zero - r.lower;
    r.upper = cross_zero_upper_bound(nu, R, k);
    r.upper_margin = r.upper - r.zero;
    r.radial_upper = cross_zero_upper_bound(0.0, R, k);
    r.radial_margin = r.radial_upper - r.radial_zero;
    r.lower_ok = (nu == 0.0) ? r.lower_margin >= -tol : r.lower_margin > 0.0;
    // Strict bounds must clear the zero's own uncertainty.
    r.upper_ok = r.upper_margin > tol;
    r.radial_ok = r.radial_margin > tol;
    return r;
}

}  // namespace bcross
