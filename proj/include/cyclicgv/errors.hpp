#pragma once

#include <stdexcept>
#include <string>

namespace cyclicgv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (delta >= 1/2 for constructions, radius > n, empty code rate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public DomainError {
 public:
  LengthMismatchError(std::size_t lhs, std::size_t rhs)
      : DomainError("codeword length mismatch: " + std::to_string(lhs) +
                    " vs " + std::to_string(rhs)) {}
};

/// The request is well-formed but exceeds a configured exhaustive limit or
/// budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation's input contract was violated (e.g. a pool that is not
/// closed under cyclic shifts).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A bounded search finished without finding what it was looking for.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (code files, rationals, codewords).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclicgv
