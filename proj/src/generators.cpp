#include "berlab/generators.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace berlab {

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Gaussian: return "gaussian";
    case OperatorKind::Hermitian: return "hermitian";
    case OperatorKind::Unitary: return "unitary";
    case OperatorKind::NilpotentShift: return "nilpotent";
    case OperatorKind::Normal: return "normal";
  }
  return "gaussian";
}

OperatorKind draw_operator_kind(SplitMix64& rng) {
  if (rng.uniform() >= 0.2) return OperatorKind::Gaussian;
  static constexpr OperatorKind kStructured[] = {OperatorKind::Hermitian, OperatorKind::Unitary,
                                                 OperatorKind::NilpotentShift, OperatorKind::Normal};
  return kStructured[rng.below(4)];
}

Matrix random_unitary(SplitMix64& rng, Index dim) {
  const Matrix g = random_complex_matrix(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  return q;
}

Operator random_operator(SplitMix64& rng, Index dim, double scale, OperatorKind kind) {
  if (!(scale > 0)) throw Error(ErrorCode::InvalidInput, "scale must be positive");
  if (dim < 1) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  const double s = scale / std::sqrt(static_cast<double>(dim));
  switch (kind) {
    case OperatorKind::Gaussian:
      return Operator(s * random_complex_matrix(rng, dim, dim));
    case OperatorKind::Hermitian: {
      const Matrix g = random_complex_matrix(rng, dim, dim);
      return Operator(s * (0.5 * (g + g.adjoint())));
    }
    case OperatorKind::Unitary:
      return Operator(scale * random_unitary(rng, dim));
    case OperatorKind::NilpotentShift: {
      Matrix m = Matrix::Zero(dim, dim);
      for (Index i = 0; i + 1 < dim; ++i) m(i, i + 1) = scale;
      return Operator(std::move(m));
    }
    case OperatorKind::Normal: {
      const Matrix u = random_unitary(rng, dim);
      const Vector d = scale * random_complex_vector(rng, dim);
      return Operator(u * d.asDiagonal() * u.adjoint());
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown operator kind");
}

Operator random_operator(SplitMix64& rng, Index dim, double scale) {
  const OperatorKind kind = draw_operator_kind(rng);
  return random_operator(rng, dim, scale, kind);
}

Operator orthogonal_partner(SplitMix64& rng, const Operator& a) {
  const double c0 = rng.normal();
  const double c1 = rng.normal();
  const Operator poly(c0 * Matrix::Identity(a.dim(), a.dim()) + c1 * (a.adjoint() * a).matrix());
  return Complex(0.0, 1.0) * (a * poly);
}

std::vector<Complex> random_disc_points(SplitMix64& rng, std::size_t count, double radius) {
  std::vector<Complex> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    const double r = radius * std::sqrt(rng.uniform());
    const Complex z = std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
    bool dup = false;
    for (const Complex& p : pts) dup = dup || p == z;
    if (!dup) pts.push_back(z);
  }
  return pts;
}

Matrix random_gram(SplitMix64& rng, Index n, Index m) {
  const Matrix k = random_complex_matrix(rng, n, m);
  Matrix g = k.adjoint() * k;
  return 0.5 * (g + g.adjoint());
}

}  // namespace berlab
