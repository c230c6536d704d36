#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tml {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text could not be parsed; `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An aleph index reached the configured maximum level.
class LevelError : public Error {
 public:
  using Error::Error;
};

/// Natural-number arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ZeroArgument : public Error {
 public:
  using Error::Error;
};

/// The logarithm exists but is not expressible with finite aleph exponents.
class UnsupportedLogarithm : public Error {
 public:
  using Error::Error;
};

/// Invalid model document or model construction.
class ModelError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A transform that needs an acyclic model below the pointed world got a cycle.
class NonTreeError : public Error {
 public:
  using Error::Error;
};

class CompressionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tml
