// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace bcross {

inline constexpr double kDefaultAlphaTol = 1e-9;

enum class AlphaMethod { ode, transcendental };

std::string to_string(AlphaMethod m);

struct AlphaSample {
    double x = 0.0;
    double alpha = 0.0;
};

/// A solved alpha(x) trajectory for one R. Immutable once built. Between
/// samples alpha is a cubic Hermite interpolant whose node slopes are the
/// ODE field F(x, alpha), clamped (Fritsch-Carlson) so the interpolant stays
/// monotone.
class AlphaCurve {
public:
    AlphaCurve(double R, std::vector<AlphaSample> samples, double x0, double tol, AlphaMethod method);

    double R() const { return R_; }
    double x0() const { return x0_; }
    double tol() const { return tol_; }
    AlphaMethod method() const { return method_; }
    const std::vector<AlphaSample>& samples() const { return samples_; }
    double x_max() const { return samples_.back().x; }

    /// Interpolated alpha(x) for 0 <= x <= x_max().
    double operator()(double x) const;

private:
    struct Interp;

    double R_;
    std::vector<AlphaSample> samples_;
    double x0_;
    double tol_;
    AlphaMethod method_;
    std::shared_ptr<const Interp> interp_;
};

/// Abscissa of the corner alpha(x0) = x0: pi / (sqrt(R^2-1) - arccos(1/R)).
double corner_x0(double R);

/// max(4 x0, 20): far enough past the maximiser of x/alpha(x)^2.
double default_alpha_x_max(double R);

/// Integrates alpha' = F(x, alpha), alpha(0) = pi/(R-1) on [0, x_max] with
/// an embedded Dormand-Prince 5(4) pair. The crossing of the diagonal
/// alpha = x is located as an event and integration restarts there on the
/// branch below the diagonal. Every sample is checked against the sandwich
/// bounds (InvariantError on failure); ConvergenceError on step underflow.
AlphaCurve solve_ivp(double R, double x_max, double tol = kDefaultAlphaTol);

/// alpha(x) from the closed-form transcendental equations: the one valid
/// above the diagonal for x < x0 and the one valid below it for x >= x0.
double alpha_transcendental(double R, double x, double tol = 1e-13);

/// Curve sampled from alpha_transcendental on a uniform grid (plus x0).
AlphaCurve alpha_curve_transcendental(double R, double x_max, int intervals = 400,
                                      double tol = 1e-13);

/// Comparison solution iota~(x) = x / sin(theta), where theta in (0, pi/2)
/// solves cot(theta) - (pi/2 - theta) = pi R / ((R-1) x); iota~(0) = pi R/(R-1).
double tilde_iota(double R, double x);

struct AlphaBounds {
    double lower = 0.0;         ///< sqrt(pi^2/(R-1)^2 + x^2/R^2)
    double upper_iota = 0.0;    ///< iota~(x)/R
    double upper_linear = 0.0;  ///< pi/(R-1) + pi x/(2R)
};

/// Sandwich bounds lower < alpha(x) < upper_iota <= upper_linear, x > 0.
AlphaBounds alpha_bounds(double R, double x);

}  // namespace bcross
