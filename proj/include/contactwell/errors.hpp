#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace contactwell {

// Root of every failure the library reports. Numerical failures (the solver
// could not produce a trustworthy answer) derive from NumericalFailure so
// front ends can map them to a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class SingularJacobian : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// Carries the best iterate seen before the budget ran out.
class NoConvergence : public NumericalFailure {
 public:
  NoConvergence(const std::string& what, Eigen::VectorXcd best_iterate, double best_residual)
      : NumericalFailure(what), best_iterate_(std::move(best_iterate)), best_residual_(best_residual) {}

  const Eigen::VectorXcd& best_iterate() const noexcept { return best_iterate_; }
  double best_residual() const noexcept { return best_residual_; }

 private:
  Eigen::VectorXcd best_iterate_;
  double best_residual_;
};

class NotSymmetric : public UsageError {
 public:
  using UsageError::UsageError;
};

class BadPanelCount : public UsageError {
 public:
  using UsageError::UsageError;
};

class InvalidLabel : public UsageError {
 public:
  using UsageError::UsageError;
};

class WrongSolvePath : public UsageError {
 public:
  using UsageError::UsageError;
};

class IdenticallyZero : public UsageError {
 public:
  using UsageError::UsageError;
};

class DegenerateDenominator : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class InvalidReduction : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class ReductionFailed : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class LabelNotFound : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class SolutionRejected : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class DegenerateState : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace contactwell
