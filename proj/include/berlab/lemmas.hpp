#pragma once

#include "berlab/operator.hpp"

namespace berlab {

/// Two sides of a scalar inequality lhs <= rhs.
struct Comparison {
  double lhs = 0.0;
  double rhs = 0.0;

  double slack() const noexcept { return rhs - lhs; }
  /// rhs - lhs >= -tol * max(|lhs|, |rhs|, 1)
  bool holds(double tol) const noexcept;
};

/// <P x, x>^r vs <P^r x, x> for positive P, unit x and r >= 1.
Comparison jensen_power(const PsdSpectrum& p, const Vector& x, double r);

/// |<A x, y>|^2 vs <|A|^{2 alpha} x, x> <|A*|^{2(1-alpha)} y, y>.
Comparison mixed_schwarz(const Operator& a, const Vector& x, const Vector& y, double alpha);

/// |<x, e> <e, y>| vs (||x|| ||y|| + |<x, y>|) / 2 for unit e.
Comparison buzano(const Vector& x, const Vector& y, const Vector& e);

}  // namespace berlab
