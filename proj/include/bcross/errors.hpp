// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bcross {

/// Argument outside the evaluation domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative method (quadrature, root search, ODE stepper) did not reach its target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold for valid input was violated.
/// Seeing this means a numerical defect, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bcross
