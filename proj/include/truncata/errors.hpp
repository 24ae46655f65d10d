#pragma once

#include <stdexcept>
#include <string>

namespace truncata {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Raised by exact_inverse; carries the column whose pivot search failed.
struct SingularMatrixError : Error {
  int pivot_column;
  explicit SingularMatrixError(int col)
      : Error("singular matrix: no nonzero pivot in column " + std::to_string(col)),
        pivot_column(col) {}
};

// Raised when the linear system for an S-series coefficient is singular.
struct ResonanceError : Error {
  int coefficient_index;
  explicit ResonanceError(int k)
      : Error("resonant parameters for S-series at coefficient " + std::to_string(k)),
        coefficient_index(k) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace truncata
