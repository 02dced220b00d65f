#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigenframe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Input is well formed but outside what the algorithms handle (cables,
/// non-prime q, forcing the exact backend on an irrational spectrum, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, long iterations)
      : Error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  long iterations() const noexcept { return iterations_; }

 private:
  long iterations_;
};

/// A precondition of an operation does not hold; `witness` describes why.
class PreconditionViolation : public Error {
 public:
  PreconditionViolation(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// An internal consistency check failed. Always a bug or a bad scaling choice.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eigenframe
