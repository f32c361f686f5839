#pragma once

#include <stdexcept>
#include <string>

namespace hadamard {

/// Raised when an argument lies outside the domain of a formula
/// (nonpositive determinant, discriminant below zero, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Base for failures of an iterative or adaptive numerical kernel.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoSignChange : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class MaxIterations : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SingularJacobian : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Adaptive step shrank below the floor; usually a singular right-hand side.
class StepUnderflow : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DegenerateLeadingCoefficient : public DomainError {
public:
  using DomainError::DomainError;
};

/// Jump-set discriminant is negative for the requested shared singular value.
class OutsideDomain : public DomainError {
public:
  using DomainError::DomainError;
};

class NoWPoint : public DomainError {
public:
  using DomainError::DomainError;
};

class NoConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Secondary solve landed outside λ ∈ [0,1] or collapsed onto the primary
/// jump set; the shared singular value is off the physical branch.
class LambdaOutOfRange : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class OutsideWindow : public DomainError {
public:
  using DomainError::DomainError;
};

class TailTooShort : public NumericalError {
public:
  using NumericalError::NumericalError;
};

} // namespace hadamard
