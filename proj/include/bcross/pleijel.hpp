// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "bcross/alpha.hpp"
#include "bcross/crosszeros.hpp"

namespace bcross {

/// One Dirichlet eigenvalue of the annulus 1 < |x| < R, placed at global
/// index k. Eigenfunctions are (cross-product in r) * cos(nu theta); for
/// nu >= 1 the sin partner shares the eigenvalue, so such entries occupy
/// two consecutive indices and appear twice in an enumerated spectrum.
struct SpectrumEntry {
    int k = 0;
    int nu = 0;
    int n = 0;
    double zero = 0.0;
    double eigenvalue = 0.0;
    int multiplicity = 1;
    int nodal_count = 0;
};

/// Nodal domains of the (nu, n) eigenfunction: n for nu = 0, else 2 nu n.
int nodal_count(int nu, int n);

/// First `count` eigenvalues in nondecreasing order, one row per global
/// index k = 1..count. Ties are ordered by (nu, n). Orders are processed in
/// parallel when OpenMP is available; the result does not depend on the
/// schedule.
std::vector<SpectrumEntry> enumerate_spectrum(double R, int count, double tol = kDefaultZeroTol);

/// Single-threaded reference for enumerate_spectrum: walks orders upward
/// until the lower bound for a_{nu,1} passes the cutoff.
std::vector<SpectrumEntry> enumerate_spectrum_serial(double R, int count,
                                                     double tol = kDefaultZeroTol);

/// Weyl-law estimate of the count-th eigenvalue, used to choose the cutoff.
double weyl_eigenvalue_estimate(double R, double count);

/// (k, nodal_count_k / k) for k in [k_from, k_to].
std::vector<std::pair<int, double>> nodal_ratio_series(double R, int k_from, int k_to,
                                                       double tol = kDefaultZeroTol);

/// Lower bound (8/(R^2-1)) sup_x x/alpha(x)^2 for the Pleijel constant.
/// It is an equality when large eigenvalues have multiplicity at most two,
/// which is not known, so is_lower_bound_only is always set.
struct PleijelEstimate {
    double R = 0.0;
    double x_star = 0.0;
    double sup_value = 0.0;
    double pleijel_value = 0.0;
    bool is_lower_bound_only = true;
    double x_max = 0.0;
};

inline constexpr double kDefaultPleijelTol = 1e-6;

/// Solves alpha on [0, default_alpha_x_max(R)] and maximises x/alpha(x)^2:
/// 200 log-spaced samples on [1e-3 x0, x_max], then golden-section search
/// on the bracket around the best sample to relative width tol. The range
/// is doubled (up to three times) if the maximum sits at its right end.
PleijelEstimate pleijel_estimate(double R, double tol = kDefaultPleijelTol);

/// Same search over a given curve; throws ConvergenceError if the maximum
/// is at the right end of the curve.
PleijelEstimate pleijel_from_curve(const AlphaCurve& curve, double tol = kDefaultPleijelTol);

/// Reference values of the bound for the rectangle (2/pi) and the disk.
inline constexpr double kPleijelRectangle = 0.6366197723675814;
inline constexpr double kPleijelDisk = 0.4613019;

}  // namespace bcross
