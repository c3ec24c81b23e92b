#pragma once

#include <stdexcept>
#include <string>

namespace morseband {

// Argument outside the documented domain of a function.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Result not representable in double precision.
struct RangeError : std::range_error {
  using std::range_error::range_error;
};

// Series evaluation lost too many digits to cancellation.
struct AccuracyLossError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature refinement or series did not settle within its budget.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output file could not be written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace morseband
