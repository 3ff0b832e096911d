#pragma once

#include <stdexcept>
#include <string>

namespace nctb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (disconnected graph, bad cover, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Malformed text input; the message carries "<source>:<line>: ".
class ParseError : public Error {
public:
  ParseError(const std::string &source, int line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what) {}
};

/// A search exceeded its node budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A teaching map handed to an extraction routine does not have the shape
/// the routine relies on.
class InvalidWitness : public Error {
public:
  using Error::Error;
};

/// A structural invariant that should hold for the declared graph class failed.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace nctb
