#pragma once

#include <stdexcept>
#include <string>

namespace dqa {

/// Precondition or interface-contract failure (bad arguments, dimension
/// mismatch, invalid indices).
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A smooth (twice differentiable) control was required but a piecewise
/// representation was supplied.
struct NotDifferentiable : ContractViolation {
  using ContractViolation::ContractViolation;
};

/// A QAOA layer with |gamma| + |beta| = 0 cannot be converted to a schedule
/// segment.
struct DegenerateLayer : ContractViolation {
  using ContractViolation::ContractViolation;
};

/// Problem too large for the requested materialized representation.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure inside an algorithm.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Norm drift or non-convergence in the time propagator.
struct IntegratorFailure : NumericError {
  using NumericError::NumericError;
};

/// Iterative eigensolver failed to converge.
struct IterativeFailure : NumericError {
  using NumericError::NumericError;
};

/// Gap fell below the resolvable floor in an adiabatic-bound evaluation.
struct SingularGap : NumericError {
  using NumericError::NumericError;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ContractViolation(msg);
}

}  // namespace dqa
