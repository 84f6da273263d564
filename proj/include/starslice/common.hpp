#pragma once

#include <stdexcept>
#include <string>

namespace starslice {

/// Raised for precondition violations and unrecoverable numerical failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity together with an estimate of its absolute error.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace starslice
