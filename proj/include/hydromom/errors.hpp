#pragma once

#include <stdexcept>
#include <string>

namespace hydromom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (x <= 0 for Bessel J, |x| > 1 for Legendre, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point coincides with a pole location.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Antiderivative from -infinity requested for a term with exponent 1 (log) or 1/2 (divergent).
class NonIntegrableError : public Error {
 public:
  using Error::Error;
};

/// Product whose result cannot be written as a canonical pole sum.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Residue requested at a half-integer branch point.
class BranchPointError : public Error {
 public:
  using Error::Error;
};

/// Residue requested at a point that carries no pole.
class NotAPoleError : public Error {
 public:
  using Error::Error;
};

/// Real-line integral whose integrand does not decay fast enough.
class DivergentIntegralError : public Error {
 public:
  using Error::Error;
};

/// Proportionality fit against an (almost) identically zero closed form.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its interval budget.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hydromom
