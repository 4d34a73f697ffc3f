// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

namespace bcross {

/// Smallest argument at which the cross-product is evaluated (Y_nu blows up at 0).
inline constexpr double kCrossZMin = 1e-8;
inline constexpr double kDefaultZeroTol = 1e-10;

/// The k-th positive zero a_{nu,k} of f_{nu,R}(z) = J_nu(Rz) Y_nu(z) - J_nu(z) Y_nu(Rz).
struct CrossZero {
    double nu = 0.0;
    double R = 0.0;
    int k = 0;
    double value = 0.0;
    double residual = 0.0;                  ///< |f_{nu,R}(value)|
    std::pair<double, double> bracket{};    ///< final sign-change interval containing value
};

/// f_{nu,R}(z) for nu >= 0, R > 1, z >= kCrossZMin.
double eval_cross(double nu, double R, double z);

/// Lower bound sqrt(a_{0,k}^2 + nu^2/R^2) given a_{0,k}.
double mccann_lower_bound(double radial_zero, double nu, double R);
/// Strict upper bound pi k/(R-1) + pi nu/(2R).
double cross_zero_upper_bound(double nu, double R, int k);

/// k-th positive zero to absolute accuracy tol. The bracket is found by a
/// sign-change scan between the lower and upper bounds with step
/// pi/(4(R-1)), verified by a recount at half the step, and polished by
/// TOMS 748 until its width is at most tol. Throws ConvergenceError if
/// fewer than k sign changes lie below the upper bound.
CrossZero zero(double nu, double R, int k, double tol = kDefaultZeroTol);

/// All zeros <= limit in increasing order, indices 1, 2, ...
std::vector<CrossZero> zeros_up_to(double nu, double R, double limit, double tol = kDefaultZeroTol);

/// Same as zeros_up_to but with a precomputed a_{0,1} for the scan start,
/// so callers sweeping many orders pay for it once.
std::vector<CrossZero> zeros_up_to(double nu, double R, double limit, double tol, double radial_first_zero);

/// Margins of the lower bound sqrt(a_{0,k}^2 + nu^2/R^2) <= a_{nu,k}, the
/// upper bound a_{nu,k} < pi k/(R-1) + pi nu/(2R) and, for the radial
/// zero, a_{0,k} < pi k/(R-1). Positive margin means the bound holds.
struct BoundReport {
    double nu = 0.0;
    double R = 0.0;
    int k = 0;
    double zero = 0.0;
    double radial_zero = 0.0;
    double lower = 0.0;
    double lower_margin = 0.0;
    double upper = 0.0;
    double upper_margin = 0.0;
    double radial_upper = 0.0;
    double radial_margin = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
    bool radial_ok = false;

    bool all_ok() const { return lower_ok && upper_ok && radial_ok; }
};

/// Evaluates all three bounds for (nu, R, k). The lower bound is an
/// identity at nu = 0 and is accepted there up to the zero tolerance.
BoundReport check_bounds(double nu, double R, int k, double tol = kDefaultZeroTol);

}  // namespace bcross
