#pragma once

#include <stdexcept>

namespace ordstop {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter or constructor argument (bad probabilities, negative
/// support points, malformed input data).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Instance does not have the support shape an algorithm requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the instance is too large.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordstop
