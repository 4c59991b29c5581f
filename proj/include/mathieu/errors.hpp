#pragma once

#include <stdexcept>
#include <string>

namespace mathieu {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A finite result exists but does not fit in a double.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Cancellation destroyed the significant digits of an alternating sum.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, double cancellation_ratio)
      : Error(what), cancellation_ratio_(cancellation_ratio) {}

  double cancellation_ratio() const noexcept { return cancellation_ratio_; }

 private:
  double cancellation_ratio_;
};

/// A convergence guard failed; `guard()` names the violated condition.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::string guard)
      : Error(what + " [guard: " + guard + "]"), guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// The requested tolerance could not be reached within the work budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace mathieu
