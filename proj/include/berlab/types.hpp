#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace berlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  ZeroKernelPoint,
  PointOutsideDisc,
  PointTooLarge,
  DuplicatePoint,
  IndexOutOfRange,
  DimensionMismatch,
  MissingSecondOperand,
  NotNormal,
  NotOrthogonal,
  UnknownBoundId,
  UnknownFixture,
  InvalidConfig,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Inner product linear in the first argument: <x, y> = y^H x.
inline Complex inner(const Vector& x, const Vector& y) { return y.dot(x); }

}  // namespace berlab
