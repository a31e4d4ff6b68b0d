#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elmis {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: empty samples, non-finite values, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The moment constraint admits no strictly positive weights.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Constraint vectors do not span the full space, so the interior of the
/// convex hull is empty even when the origin lies on the hull.
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

/// A multiplier was evaluated outside the open domain 1 + lambda*h_i > 0.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Iteration limit reached. Carries the last bracket (scalar solvers) or the
/// last iterate norm (vector solver) for diagnostics.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// A statistic requested from an infeasible solution.
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

/// A diagnostic whose preconditions on the data are not met.
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

/// Every grid point of a posterior is infeasible or has zero prior mass.
class DegeneratePosterior : public Error {
 public:
  using Error::Error;
};

}  // namespace elmis
