#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric_ci {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square determinant, too few rows, length mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (zero vector, bad parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// The all-ones vector is not in the rational row span of A.
class NotHomogeneous : public InvalidConfiguration {
 public:
  using InvalidConfiguration::InvalidConfiguration;
};

/// A candidate basis B is not a full-rank kernel matrix of A.
class InvalidBasis : public Error {
 public:
  using Error::Error;
};

/// An internal guarantee failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace toric_ci
