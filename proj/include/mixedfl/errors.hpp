#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixedfl {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector/matrix dimension disagreement between two operands.
class DimMismatchError : public Error {
 public:
  DimMismatchError(std::size_t lhs, std::size_t rhs, const std::string& where)
      : Error(where + ": dimension mismatch (" + std::to_string(lhs) +
              " vs " + std::to_string(rhs) + ")"),
        lhs_dim(lhs),
        rhs_dim(rhs) {}

  std::size_t lhs_dim;
  std::size_t rhs_dim;
};

// Invalid argument or configuration value; message carries the field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Loss became non-finite during a run.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(long round)
      : Error("loss became non-finite at round " + std::to_string(round)),
        round(round) {}

  long round;
};

}  // namespace mixedfl
