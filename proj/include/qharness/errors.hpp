#pragma once

#include <stdexcept>
#include <string>

namespace qh {

/// Invalid parameters or arguments (CLI exit code 2).
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numeric failure inside a computation (CLI exit code 3).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A recurrence coefficient B_n fell below the clamping tolerance: the state
/// is outside U_s or the parameters are inadmissible.
struct NegativeBeta : NumericError {
  int index;
  double value;
  NegativeBeta(int n, double b)
      : NumericError("negative recurrence coefficient B_" + std::to_string(n) + " = " +
                     std::to_string(b)),
        index(n),
        value(b) {}
};

struct EigenFailure : NumericError {
  using NumericError::NumericError;
};

/// The absolutely continuous part degenerates (eta*theta + 1 - q = 0).
struct DegenerateAC : NumericError {
  using NumericError::NumericError;
};

/// State x is not in the admissible set U_s (CLI exit code 4).
struct OutsideSupport : std::runtime_error {
  double x;
  explicit OutsideSupport(double x_)
      : std::runtime_error("state x = " + std::to_string(x_) + " outside the support set U_s"),
        x(x_) {}
};

/// None of the closed-form distribution cases applies.
struct UnidentifiableRegime : NumericError {
  using NumericError::NumericError;
};

/// A conditioning probability vanished in the two-point chain.
struct DegenerateConditioning : NumericError {
  using NumericError::NumericError;
};

}  // namespace qh
