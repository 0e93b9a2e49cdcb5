#pragma once

#include <stdexcept>
#include <string>

namespace susy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x / sin(theta) requested for a polynomial with a sin^0 monomial.
class DivisionNotExact : public Error {
 public:
  using Error::Error;
};

/// A rational denominator that the model requires to be nonzero vanished.
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class SingularLinearSystem : public Error {
 public:
  using Error::Error;
};

/// The per-order residual has a component outside the span of the ansatz.
class AnsatzInsufficient : public Error {
 public:
  using Error::Error;
};

class InconsistentConvolution : public Error {
 public:
  using Error::Error;
};

/// V+(a1) - V-(a2) at some order is not constant in theta.
class ShapeInvarianceBroken : public Error {
 public:
  using Error::Error;
};

/// A product would leave the csc^2 / cot*csc singular form.
class SingularOrderExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (bad m string, invalid option combination).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace susy
