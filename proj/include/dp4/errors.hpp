#pragma once

#include <stdexcept>
#include <string>

namespace dp4 {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (class literals, numbers, CLI usage).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not a bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotEffectiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

class LinesNotDisjointError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NegativeTwistError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegreeTooSmallError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotACurveClassError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonTerminatingError : public InternalError {
 public:
  using InternalError::InternalError;
};

class InconsistentDecompositionError : public InternalError {
 public:
  using InternalError::InternalError;
};

class InternalInconsistencyError : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace dp4
