#pragma once

#include <stdexcept>
#include <string>

namespace anisowave {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for inputs violating a numeric precondition (singular tensors,
/// zero wavevector, ...). The CLI maps these to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ZeroWaveVector : public NumericError {
 public:
  ZeroWaveVector() : NumericError("wavevector must be nonzero") {}
};

class NonPositiveSpeed : public NumericError {
 public:
  explicit NonPositiveSpeed(double c)
      : NumericError("wave speed must be positive, got " + std::to_string(c)), speed_(c) {}
  double speed() const noexcept { return speed_; }

 private:
  double speed_;
};

class SingularMatrix : public NumericError {
 public:
  SingularMatrix(double abs_det, double threshold)
      : NumericError("matrix is singular: |det| = " + std::to_string(abs_det) +
                     " below threshold " + std::to_string(threshold)),
        abs_det_(abs_det),
        threshold_(threshold) {}
  double abs_det() const noexcept { return abs_det_; }
  double threshold() const noexcept { return threshold_; }

 private:
  double abs_det_;
  double threshold_;
};

class DecompositionFailure : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateDenominator : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace anisowave
