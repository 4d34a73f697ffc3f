// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bcross/quadrature.hpp"

namespace bcross {

/// J_nu(x), Y_nu(x) and their x-derivatives from one evaluation.
struct BesselJY {
    double j = 0.0;
    double y = 0.0;
    double jp = 0.0;
    double yp = 0.0;
};

/// Bessel functions of real order nu >= 0 at x > 0.
///
/// Small arguments (x < 2) use Temme's series for Y_mu, |mu| <= 1/2; larger
/// arguments use Steed's continued fraction for (J'+iY')/(J+iY). In both
/// cases J is obtained from the continued fraction for J'/J at nu, downward
/// recurrence to mu and the Wronskian, and Y by upward recurrence from mu.
/// For x >= 30 the Hankel asymptotic expansion replaces the continued
/// fractions: directly at nu when x >= nu^2, otherwise at mu and mu + 1
/// followed by upward recurrence of both J and Y (needs nu <= 0.8 x).
/// Values past the double range under/overflow (J -> 0, Y -> -inf).
BesselJY bessel_jy(double nu, double x);

double bessel_j(double nu, double x);
double bessel_y(double nu, double x);

/// J_nu(x)^2 + Y_nu(x)^2, decreasing in x for nu >= 0.
double bessel_modulus_sq(double nu, double x);

double bessel_k0(double x);
/// e^x K0(x); finite for all x > 0 down to the smallest normal doubles.
double bessel_k0_scaled(double x);

/// Closed form of int_0^inf K0(u) e^{-a u} du = arccos(a) / sqrt(1 - a^2), |a| < 1.
double watson_laplace(double a);

/// int_0^inf K0(2 c sinh t) e^{-rate t} dt, computed in u = 2 c sinh t.
/// `rate` may be negative (growing exponential); the integral still
/// converges because the growth is polynomial in u.
double k0_sinh_integral(double c, double rate, const QuadratureConfig& quad);

/// Relative discrepancy between Nicholson's integral
/// (8/pi^2) int_0^inf K0(2x sinh t) cosh(2 nu t) dt and J_nu^2 + Y_nu^2.
/// Requires x > nu.
double nicholson_check(double nu, double x, const QuadratureConfig& quad);

}  // namespace bcross
