#pragma once

#include <stdexcept>
#include <string>

namespace gvpfrs {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation, e.g. a membership
/// degree outside [0,1] or a non-crisp relation passed to a crisp operator.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown connective or law name.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Unknown universe label.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition does not hold (non-involutive negation, a
/// grouping that is not the dual of the overlap, ...).
class PremiseError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a documented capacity (brute-force cap).
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gvpfrs
