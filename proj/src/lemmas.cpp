#include "berlab/lemmas.hpp"

#include <algorithm>
#include <cmath>

namespace berlab {

bool Comparison::holds(double tol) const noexcept {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return slack() >= -tol * scale;
}

Comparison jensen_power(const PsdSpectrum& p, const Vector& x, double r) {
  if (r < 1.0) throw Error(ErrorCode::InvalidInput, "exponent must be >= 1");
  const double base = inner(p.power(1.0) * x, x).real();
  const double powered = inner(p.power(r) * x, x).real();
  return {std::pow(std::max(base, 0.0), r), powered};
}

Comparison mixed_schwarz(const Operator& a, const Vector& x, const Vector& y, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidInput, "alpha must lie in [0, 1]");
  const PsdSpectrum left(a.adjoint() * a);
  const PsdSpectrum right(a * a.adjoint());
  const double lhs = std::norm(inner(a * x, y));
  const double rhs = inner(left.power(alpha) * x, x).real() * inner(right.power(1.0 - alpha) * y, y).real();
  return {lhs, rhs};
}

Comparison buzano(const Vector& x, const Vector& y, const Vector& e) {
  const double lhs = std::abs(inner(x, e) * inner(e, y));
  const double rhs = 0.5 * (x.norm() * y.norm() + std::abs(inner(x, y)));
  return {lhs, rhs};
}

}  // namespace berlab
