#pragma once

#include <stdexcept>
#include <string>

namespace polya {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A domain description string does not match the grammar.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method failed to produce a certified result.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured mode budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace polya
