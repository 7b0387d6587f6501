#pragma once

#include <stdexcept>
#include <string>

namespace desing {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to incompatible rings (different cyclotomic orders,
/// arities, truncation degrees).
class MismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
  using DomainError::DomainError;
};

/// A root of unity equal to 1 was passed where a nontrivial root is required.
class TrivialRootError : public DomainError {
 public:
  TrivialRootError() : DomainError("root of unity must be nontrivial (xi != 1)") {}
};

/// Text that could not be parsed into a value.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace desing
