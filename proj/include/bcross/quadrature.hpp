// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace bcross {

/// Tuning for the K0-weighted integrals on [0, inf).
///
/// `max_nodes` caps the number of Gauss-Kronrod panels the adaptive driver
/// may hold at once. `truncation_u` is the initial upper cut of the
/// semi-infinite range; it is extended when the integrand has not decayed
/// there.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    int max_nodes = 4096;
    double truncation_u = 40.0;

    /// Throws DomainError unless rel_tol > 0, max_nodes >= 16,
    /// truncation_u > 0 and the K0 tail sqrt(pi/(2u)) e^{-u} at truncation_u
    /// is below rel_tol.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int panels = 0;
};

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Throws ConvergenceError when the panel budget runs out before the
/// error estimate drops below rel_tol * |value| (or abs_floor).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg, double abs_floor = 0.0);

/// Integral over [0, inf) of an integrand that eventually decays
/// exponentially. Integrates [0, U] with U starting at cfg.truncation_u and
/// doubles U until the local decay rate at U bounds the tail below
/// rel_tol * |value|. Throws ConvergenceError if decay is never observed.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& cfg);

}  // namespace bcross
