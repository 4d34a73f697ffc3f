// SPDX-License-Identifier: Apache-2.0
#include "bcross/willis.hpp"

#include <cmath>
#include <string>

#include "bcross/crosszeros.hpp"
#include "bcross/errors.hpp"
#include "bcross/specfun.hpp"

namespace bcross {

double ac(double t) {
    return (std::abs(t) <= 1.0) ? std::acos(t) : 0.0;
}

double sr(double t) {
    return (t >= 0.0) ? std::sqrt(t) : 0.0;
}

void ScaledPoint::validate() const {
    if (!(R > 1.0) || !std::isfinite(R)) throw DomainError("ScaledPoint: R must be > 1");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("ScaledPoint: x must be >= 0");
    if (!(y > x / R) || !std::isfinite(y)) throw DomainError("ScaledPoint: requires y > x/R");
}

double k0_laplace_integral(double c, double nu, const QuadratureConfig& quad) {
    if (!(nu >= 0.0)) throw DomainError("k0_laplace_integral: order must be >= 0");
    return k0_sinh_integral(c, 2.0 * nu, quad);
}

double willis_rhs(double nu, double R, double z, const QuadratureConfig& quad) {
    const double inner = bessel_modulus_sq(nu, z);
    const double outer = bessel_modulus_sq(nu, R * z);
    const double denom = inner - outer;
    if (!(denom > 0.0)) {
        throw InvariantError("willis: J^2+Y^2 is not decreasing between z and Rz");
    }
    const double outer_int = k0_laplace_integral(R * z, nu, quad);
    const double inner_int = k0_laplace_integral(z, nu, quad);
    return 2.0 * z * (inner * outer_int - outer * inner_int) / denom;
}

double willis_derivative(double nu, double R, double a, const QuadratureConfig& quad) {
    const double f = eval_cross(nu, R, a);
    // |f| is at most of order |J||Y|; compare against the modulus scale.
    const double scale = std::sqrt(bessel_modulus_sq(nu, a) * bessel_modulus_sq(nu, R * a));
    if (std::abs(f) > kWillisResidualGate * scale) {
        throw DomainError("willis_derivative: a is not a zero of f_{nu,R} (residual " +
                          std::to_string(std::abs(f) / scale) + ")");
    }
    return willis_rhs(nu, R, a, quad);
}

double f_k(const ScaledPoint& p, int k, const QuadratureConfig& quad) {
    p.validate();
    if (k < 1) throw DomainError("f_k: k must be >= 1");
    return willis_rhs(k * p.x, p.R, k * p.y, quad);
}

double f_limit(const ScaledPoint& p) {
    p.validate();
    const double s = p.x / (p.R * p.y);
    const double t = p.x / p.y;
    const double num = std::acos(s) - ac(t);
    const double den = p.R * std::sqrt(1.0 - s * s) - sr(1.0 - t * t);
    return num / den;
}

double f_majorant(const ScaledPoint& p) {
    p.validate();
    const double s = p.x / (p.R * p.y);
    return std::acos(s) / (p.R * std::sqrt(1.0 - s * s));
}

}  // namespace bcross
