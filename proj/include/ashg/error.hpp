#pragma once

#include <stdexcept>
#include <string>

namespace ashg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sizes that do not fit together (partition vs. game, empty input, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or exact solver was asked to go past its budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter is out of its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The game does not have the shape an operation requires
/// (wrong weight mode, missing class structure, asymmetric input, ...).
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must describe the same object disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ashg
