#ifndef PROLATE_ERRORS_HPP
#define PROLATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prolate {

/// Base class of every error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A parity-restricted formula was called with an index of the wrong parity.
class ParityError : public Error {
public:
  using Error::Error;
};

/// A caller-side precondition (table size, quadrature resolution) is not met.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The Galerkin truncation failed to resolve the requested eigenfunctions.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

/// A computed quantity left its admissible range by more than the tolerance.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Results contradict a structural property that holds in exact arithmetic.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Root bracketing failed.
class NoRootError : public Error {
public:
  NoRootError(const std::string& what, double residual_lo, double residual_hi)
      : Error(what), residual_lo_(residual_lo), residual_hi_(residual_hi) {}
  double residual_lo() const noexcept { return residual_lo_; }
  double residual_hi() const noexcept { return residual_hi_; }

private:
  double residual_lo_;
  double residual_hi_;
};

} // namespace prolate

#endif
