#pragma once

#include <stdexcept>
#include <string>

namespace sarp {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A NaN or Inf appeared where finite values are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed, missing or inconsistent dataset contents.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (unknown keys, out-of-range values, bad types).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File system failures.
class IoError : public Error {
 public:
  using Error::Error;
};

/// No path exists between a start and a goal.
class PlanningError : public Error {
 public:
  using Error::Error;
};

}  // namespace sarp
