// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bcross/quadrature.hpp"

namespace bcross {

/// Zero extension of arccos: arccos t for |t| <= 1, else 0.
double ac(double t);
/// Zero extension of sqrt: sqrt t for t >= 0, else 0.
double sr(double t);

/// Scaled coordinates x = nu/k, y = a/k for a given R. Valid points satisfy
/// x >= 0 and y > x/R.
struct ScaledPoint {
    double x = 0.0;
    double y = 0.0;
    double R = 0.0;

    /// Throws DomainError unless R > 1, x >= 0 and y > x/R.
    void validate() const;
    /// y <= x: the region where arccos(x/y) has been cut off.
    bool below_diagonal() const { return x > 0.0 && y <= x; }
};

/// int_0^inf K0(2 c sinh t) e^{-2 nu t} dt.
double k0_laplace_integral(double c, double nu, const QuadratureConfig& quad = {});

/// Right side of Willis' formula for da_{nu,k}/dnu evaluated at an
/// arbitrary z > nu/R (no zero check). At a zero of f_{nu,R} this is the
/// derivative; elsewhere it is the field F_k in unscaled variables.
double willis_rhs(double nu, double R, double z, const QuadratureConfig& quad = {});

/// da_{nu,k}/dnu at a zero `a` of f_{nu,R}. Throws DomainError when
/// |f_{nu,R}(a)| exceeds kWillisResidualGate (scaled by the modulus), and
/// InvariantError when the denominator is not positive.
double willis_derivative(double nu, double R, double a, const QuadratureConfig& quad = {});

inline constexpr double kWillisResidualGate = 1e-6;

/// F_k(x, y): the field of dy/dx for y = a_{kx,k}/k.
double f_k(const ScaledPoint& p, int k, const QuadratureConfig& quad = {});

/// F(x, y) = [arccos(x/(Ry)) - Ac(x/y)] / [R sqrt(1 - (x/(Ry))^2) - Sr(1 - (x/y)^2)],
/// the k -> inf limit of F_k.
double f_limit(const ScaledPoint& p);

/// arccos(x/(Ry)) / (R sqrt(1 - (x/(Ry))^2)), which bounds F_k from above
/// and equals F below the diagonal.
double f_majorant(const ScaledPoint& p);

}  // namespace bcross
