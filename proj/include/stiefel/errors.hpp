#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stiefel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different polynomial rings, or a name is not a ring variable.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

/// Shape or dimension precondition violated.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The ideal has infinitely many complex zeros.
class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

/// An instance fails validation (bad n, k, radius, ...).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// The instance is valid but outside the supported parity (odd m, even n-k).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// A precondition of a decision route does not hold for this instance.
class HypothesisFailed : public Error {
 public:
  using Error::Error;
};

class NormalizationNotFound : public HypothesisFailed {
 public:
  using HypothesisFailed::HypothesisFailed;
};

class DegenerateFunctional : public HypothesisFailed {
 public:
  using HypothesisFailed::HypothesisFailed;
};

class DegenerateForm : public HypothesisFailed {
 public:
  using HypothesisFailed::HypothesisFailed;
};

class DegenerateZero : public HypothesisFailed {
 public:
  using HypothesisFailed::HypothesisFailed;
};

/// Numerical eigen-decomposition did not converge for any draw.
class EigenFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace stiefel
