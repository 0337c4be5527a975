#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace matfix {

/// Operand dimensions are incompatible with the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function (log 0, W_k(0) for k != 0, z = 0 ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an operation was not met by its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> last_iterate = {},
                   double residual = 0.0)
      : std::runtime_error(what), last_iterate_(last_iterate), residual_(residual) {}

  std::complex<double> last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

 private:
  std::complex<double> last_iterate_;
  double residual_;
};

/// Result of a computation is not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Unknown gate name, or a size guard tripped.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace matfix
