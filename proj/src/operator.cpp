#include "berlab/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

#include "berlab/optimize.hpp"
#include "berlab/rkhs.hpp"
#include "berlab/rng.hpp"

namespace berlab {

Operator::Operator(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::InvalidInput, "operator must be square");
  if (!m_.allFinite()) throw Error(ErrorCode::InvalidInput, "operator has non-finite entries");
}

namespace {

void require_same_dim(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

Matrix rotated_hermitian_part(const Matrix& a, double theta) {
  const Complex phase = std::polar(1.0, theta);
  return 0.5 * (phase * a + std::conj(phase) * a.adjoint());
}

}  // namespace

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.m_ + b.m_, Operator::Unchecked{});
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.m_ - b.m_, Operator::Unchecked{});
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.m_ * b.m_, Operator::Unchecked{});
}

Operator adjoint(const Operator& a) { return a.adjoint(); }

PsdSpectrum::PsdSpectrum(const Operator& p) {
  const Matrix& m = p.matrix();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw Error(ErrorCode::NotHermitian, "operator is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.adjoint()));
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::InvalidInput, "eigensolver failed");
  values_ = eig.eigenvalues();
  vectors_ = eig.eigenvectors();

  const double lmax = values_.maxCoeff();
  const double lmin = values_.minCoeff();
  if (lmin < -1e-10 * std::max(lmax, 0.0) && lmin < 0)
    throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(lmin));
  const double cutoff = 1e-12 * std::max(lmax, 0.0);
  for (Index i = 0; i < values_.size(); ++i)
    if (values_(i) <= cutoff) values_(i) = 0.0;
}

Operator PsdSpectrum::power(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidInput, "power must be finite and >= 0");
  Eigen::VectorXd powered(values_.size());
  for (Index i = 0; i < values_.size(); ++i) {
    const double v = values_(i);
    powered(i) = v > 0.0 ? (s == 0.0 ? 1.0 : std::pow(v, s)) : 0.0;
  }
  Matrix r = vectors_ * powered.asDiagonal() * vectors_.adjoint();
  return Operator(0.5 * (r + r.adjoint()));
}

Operator psd_power(const Operator& p, double s) { return PsdSpectrum(p).power(s); }

Operator modulus(const Operator& a) { return psd_power(a.adjoint() * a, 0.5); }

Operator modulus_adjoint(const Operator& a) { return psd_power(a * a.adjoint(), 0.5); }

CartesianParts cartesian(const Operator& a) {
  const Matrix& m = a.matrix();
  return {Operator(0.5 * (m + m.adjoint())), Operator((m - m.adjoint()) / Complex(0.0, 2.0))};
}

WitnessedEstimate operator_norm(const Operator& a) {
  Eigen::JacobiSVD<Matrix> svd(a.matrix(), Eigen::ComputeFullV);
  return {svd.singularValues()(0), svd.matrixV().col(0)};
}

WitnessedEstimate numerical_radius(const Operator& a, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  const Matrix& m = a.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m.rows());
  auto top = [&](double theta) {
    eig.compute(rotated_hermitian_part(m, theta), Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(m.rows() - 1);
  };
  const auto best = maximize_scalar(top, 0.0, 2.0 * std::numbers::pi, 1024, tol, true, 3);

  eig.compute(rotated_hermitian_part(m, best.argmin), Eigen::ComputeEigenvectors);
  Vector x = eig.eigenvectors().col(m.rows() - 1);
  x.normalize();
  return {std::abs(inner(m * x, x)), std::move(x)};
}

double dw_functional(const Operator& a, const Vector& x) {
  const Vector ax = a.matrix() * x;
  const double s = std::abs(inner(ax, x));
  const double b = ax.squaredNorm();
  return std::sqrt(s * s + b * b);
}

namespace {

// Projected ascent for g(x) = |<Ax,x>|^2 + ||Ax||^4 on the unit sphere.
Vector ascend(const Matrix& a, const Matrix& ata, Vector x, const DwSearchOptions& opt) {
  auto g = [&](const Vector& v) {
    const Vector av = a * v;
    const double b = av.squaredNorm();
    return std::norm(inner(av, v)) + b * b;
  };
  double gx = g(x);
  double step = opt.step;
  for (int it = 0; it < opt.max_iterations && step > 1e-14; ++it) {
    const Vector ax = a * x;
    const Complex s = inner(ax, x);
    const double b = ax.squaredNorm();
    Vector grad = std::conj(s) * ax + s * (a.adjoint() * x) + 2.0 * b * (ata * x);
    grad -= inner(grad, x) * x;  // tangent component
    const double gnorm = grad.norm();
    if (gnorm < 1e-15 * std::max(1.0, gx)) break;
    Vector trial = (x + step * grad / gnorm).normalized();
    const double gt = g(trial);
    if (gt > gx) {
      const double gain = (gt - gx) / std::max(gx, 1e-300);
      x = std::move(trial);
      gx = gt;
      if (gain < opt.gain_tol) break;
    } else {
      step *= 0.5;
    }
  }
  return x;
}

}  // namespace

WitnessedEstimate dw_lower_estimate(const Operator& a, const KernelSpace* space,
                                    const DwSearchOptions& options) {
  if (options.restarts < 0) throw Error(ErrorCode::InvalidInput, "restarts must be >= 0");
  if (space && space->dim() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "space and operator dimensions differ");

  WitnessedEstimate best;
  auto offer = [&](const Vector& x) {
    const double v = dw_functional(a, x);
    if (best.witness.size() == 0 || v > best.value) best = {v, x};
  };

  offer(numerical_radius(a).witness);
  offer(operator_norm(a).witness);
  if (space)
    for (Index j = 0; j < space->size(); ++j) offer(space->kernels().col(j));

  const Matrix& m = a.matrix();
  const Matrix ata = m.adjoint() * m;
  SplitMix64 rng(options.seed);
  for (int r = 0; r < options.restarts; ++r)
    offer(ascend(m, ata, random_unit_vector(rng, a.dim()), options));
  // Polish the incumbent as well; it is usually already near a local max.
  offer(ascend(m, ata, best.witness, options));
  return best;
}

bool is_normal(const Operator& a, double rel_tol) {
  const Matrix& m = a.matrix();
  const Matrix comm = m.adjoint() * m - m * m.adjoint();
  const double norm = operator_norm(a).value;
  return operator_norm(Operator(comm)).value <= rel_tol * norm * norm;
}

}  // namespace berlab
