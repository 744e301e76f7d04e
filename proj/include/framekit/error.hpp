#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace framekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors that mean "the mathematics failed" (singular operator, missing
/// rank, ...). The CLI maps these to exit code 1.
class MathError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidExponent : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Input could not be parsed (malformed JSON, schema violation, I/O).
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public MathError {
 public:
  explicit NotInvertible(const std::string& what,
                         double condition = std::numeric_limits<double>::infinity())
      : MathError(what), condition_estimate_(condition) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class NotSymmetric : public MathError {
 public:
  using MathError::MathError;
};

class NotSurjective : public MathError {
 public:
  using MathError::MathError;
};

class NotAFrame : public MathError {
 public:
  using MathError::MathError;
};

class NotHilbertStyle : public MathError {
 public:
  using MathError::MathError;
};

class NotInComplement : public MathError {
 public:
  using MathError::MathError;
};

class GenerationFailed : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace framekit
