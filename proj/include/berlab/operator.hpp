#pragma once

#include <cstdint>

#include <Eigen/Eigenvalues>

#include "berlab/types.hpp"

namespace berlab {

class KernelSpace;

/// Square complex matrix acting on C^n. Entries are always finite.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix entries);

  static Operator identity(Index n) { return Operator(Matrix::Identity(n, n)); }
  static Operator zero(Index n) { return Operator(Matrix::Zero(n, n)); }

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  Operator adjoint() const { return Operator(m_.adjoint(), Unchecked{}); }

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex c, const Operator& a) { return Operator(c * a.m_, Unchecked{}); }
  friend Operator operator*(double c, const Operator& a) { return Operator(c * a.m_, Unchecked{}); }
  friend Operator operator-(const Operator& a) { return Operator(-a.m_, Unchecked{}); }
  friend Vector operator*(const Operator& a, const Vector& x) { return a.m_ * x; }

 private:
  struct Unchecked {};
  Operator(Matrix entries, Unchecked) : m_(std::move(entries)) {}

  Matrix m_;
};

Operator adjoint(const Operator& a);

/// Value of a sup-type functional together with a unit vector attaining it.
struct WitnessedEstimate {
  double value = 0.0;
  Vector witness;
};

/// Eigendecomposition of a Hermitian positive semidefinite operator.
///
/// Eigenvalues at or below 1e-12 * lambda_max (including clamped negative
/// noise) are treated as exact zeros, so power(0) is the orthogonal projector
/// onto the numerical range of P and power(s) -> power(0) as s -> 0+.
class PsdSpectrum {
 public:
  /// Throws NotHermitian (asymmetry above 1e-10 relative) or NotPSD
  /// (eigenvalue below -1e-10 * lambda_max).
  explicit PsdSpectrum(const Operator& p);

  Operator power(double s) const;
  const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
  double max_eigenvalue() const noexcept { return values_.size() ? values_.maxCoeff() : 0.0; }

 private:
  Eigen::VectorXd values_;
  Matrix vectors_;
};

Operator psd_power(const Operator& p, double s);

/// |A| = (A*A)^{1/2}
Operator modulus(const Operator& a);
/// |A*| = (AA*)^{1/2}
Operator modulus_adjoint(const Operator& a);

struct CartesianParts {
  Operator real;
  Operator imag;
};

/// A = Re(A) + i Im(A) with Re(A) = (A + A*)/2 and Im(A) = (A - A*)/(2i).
CartesianParts cartesian(const Operator& a);

/// Largest singular value with the top right-singular vector as witness.
WitnessedEstimate operator_norm(const Operator& a);

/// Numerical radius from w(A) = max_theta lambda_max(Re(e^{i theta} A)).
///
/// Scans 1024 equispaced angles, refines the three best local maxima by
/// golden section to width `tol`, and reports |<A x, x>| at the top
/// eigenvector x of the best rotation. The value is a lower bound on w(A)
/// attained by the witness.
WitnessedEstimate numerical_radius(const Operator& a, double tol = 1e-8);

/// sqrt(|<Ax,x>|^2 + ||Ax||^4) for unit x.
double dw_functional(const Operator& a, const Vector& x);

struct DwSearchOptions {
  int restarts = 4;
  std::uint64_t seed = 0;
  int max_iterations = 200;
  double step = 0.1;
  double gain_tol = 1e-10;
};

/// Certified lower bound on the Davis-Wielandt radius dw(A).
///
/// Candidates: the numerical radius witness, the operator norm witness, each
/// normalized kernel of `space` (when non-null) and `restarts` random unit
/// vectors improved by projected gradient ascent on the sphere. The returned
/// value is dw_functional at the returned witness.
WitnessedEstimate dw_lower_estimate(const Operator& a, const KernelSpace* space,
                                    const DwSearchOptions& options = {});

/// ||A*A - AA*|| <= rel_tol * ||A||^2
bool is_normal(const Operator& a, double rel_tol = 1e-10);

}  // namespace berlab
