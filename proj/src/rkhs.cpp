#include "berlab/rkhs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace berlab {

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Orthonormal: return "orthonormal";
    case KernelKind::Szego: return "szego";
    case KernelKind::Bergman: return "bergman";
    case KernelKind::Fock: return "fock";
    case KernelKind::Gram: return "gram";
  }
  return "gram";
}

KernelSpace::KernelSpace(Matrix kernels, std::vector<Complex> labels, KernelKind kind,
                         std::optional<Matrix> gram)
    : kernels_(std::move(kernels)), labels_(std::move(labels)), kind_(kind), gram_(std::move(gram)) {
  if (kernels_.rows() < 1 || kernels_.cols() < 1)
    throw Error(ErrorCode::InvalidInput, "kernel space needs n >= 1 and m >= 1");
  if (static_cast<Index>(labels_.size()) != kernels_.cols())
    throw Error(ErrorCode::InvalidInput, "label count does not match kernel count");
  for (Index j = 0; j < kernels_.cols(); ++j) {
    if (!kernels_.col(j).allFinite())
      throw Error(ErrorCode::InvalidInput, "non-finite kernel column " + std::to_string(j));
    if (std::abs(kernels_.col(j).norm() - 1.0) > 1e-12)
      throw Error(ErrorCode::InvalidInput, "kernel column " + std::to_string(j) + " is not unit norm");
  }
  if (gram_ && (gram_->rows() != kernels_.cols() || gram_->cols() != kernels_.cols()))
    throw Error(ErrorCode::InvalidInput, "gram shape does not match point count");
}

Matrix KernelSpace::induced_gram() const { return kernels_.adjoint() * kernels_; }

KernelSpace KernelSpace::permuted(std::span<const std::size_t> order) const {
  const auto m = static_cast<std::size_t>(size());
  if (order.size() != m) throw Error(ErrorCode::InvalidInput, "permutation has wrong length");
  std::vector<bool> seen(m, false);
  Matrix k(dim(), size());
  std::vector<Complex> labels(m);
  std::optional<Matrix> g;
  if (gram_) g = Matrix(size(), size());
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t src = order[j];
    if (src >= m || seen[src]) throw Error(ErrorCode::InvalidInput, "not a permutation");
    seen[src] = true;
    k.col(static_cast<Index>(j)) = kernels_.col(static_cast<Index>(src));
    labels[j] = labels_[src];
    if (g)
      for (std::size_t i = 0; i < m; ++i)
        (*g)(static_cast<Index>(i), static_cast<Index>(j)) =
            (*gram_)(static_cast<Index>(order[i]), static_cast<Index>(src));
  }
  return KernelSpace(std::move(k), std::move(labels), kind_, std::move(g));
}

namespace {

void check_gram_hermitian(const Matrix& g) {
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double scale = std::max({1.0, std::abs(g(i, j)), std::abs(g(j, i))});
      if (std::abs(g(i, j) - std::conj(g(j, i))) > 1e-12 * scale)
        throw Error(ErrorCode::NotHermitian,
                    "gram entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

// Rotates the factor so that it is upper trapezoidal with a nonnegative real
// diagonal. Inner products between columns are unchanged; the representation
// no longer depends on the eigensolver's choice of basis.
Matrix canonicalize(const Matrix& k) {
  Eigen::HouseholderQR<Matrix> qr(k);
  Matrix r = qr.matrixQR().topRows(k.rows()).triangularView<Eigen::Upper>();
  for (Index i = 0; i < r.rows(); ++i) {
    const Complex d = r(i, std::min(i, r.cols() - 1));
    if (std::abs(d) > 0) r.row(i) *= std::conj(d) / std::abs(d);
  }
  return r;
}

void check_points(std::span<const Complex> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "at least one point is required");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j])
        throw Error(ErrorCode::DuplicatePoint, "points " + std::to_string(j) + " and " + std::to_string(i));
}

void check_in_disc(std::span<const Complex> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!(std::abs(points[i]) <= 1.0 - kDiscMargin))
      throw Error(ErrorCode::PointOutsideDisc, "point " + std::to_string(i));
}

template <class Kernel>
Matrix kernel_gram(std::span<const Complex> points, Kernel kernel) {
  const auto m = static_cast<Index>(points.size());
  Matrix g(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      g(i, j) = kernel(points[static_cast<std::size_t>(i)] * std::conj(points[static_cast<std::size_t>(j)]));
  return g;
}

}  // namespace

KernelSpace build_from_gram(const Matrix& gram, std::vector<Complex> labels, KernelKind kind) {
  const Index m = gram.rows();
  if (m < 1 || gram.cols() != m) throw Error(ErrorCode::InvalidInput, "gram must be square and non-empty");
  if (!gram.allFinite()) throw Error(ErrorCode::InvalidInput, "gram has non-finite entries");
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(m));
    for (Index j = 0; j < m; ++j) labels.emplace_back(static_cast<double>(j), 0.0);
  }
  if (static_cast<Index>(labels.size()) != m)
    throw Error(ErrorCode::InvalidInput, "label count does not match gram size");

  check_gram_hermitian(gram);
  Eigen::VectorXd inv_sqrt_diag(m);
  for (Index j = 0; j < m; ++j) {
    const double d = gram(j, j).real();
    if (!(d > 1e-10)) throw Error(ErrorCode::ZeroKernelPoint, "diagonal entry " + std::to_string(j));
    inv_sqrt_diag(j) = 1.0 / std::sqrt(d);
  }

  // Factor the normalized Gram so the scale of exp-type kernels does not matter.
  Matrix normalized = 0.5 * (gram + gram.adjoint());
  normalized = inv_sqrt_diag.asDiagonal() * normalized * inv_sqrt_diag.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Matrix> eig(normalized);
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::InvalidInput, "gram eigensolver failed");
  const Eigen::VectorXd& values = eig.eigenvalues();  // ascending
  const double lmax = values(m - 1);
  if (values(0) < -1e-10 * lmax)
    throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(values(0)) + " below tolerance");

  std::vector<Index> kept;
  for (Index i = m - 1; i >= 0; --i)
    if (values(i) > 1e-12 * lmax) kept.push_back(i);

  Matrix factor(static_cast<Index>(kept.size()), m);
  for (std::size_t r = 0; r < kept.size(); ++r)
    factor.row(static_cast<Index>(r)) = std::sqrt(values(kept[r])) * eig.eigenvectors().col(kept[r]).adjoint();

  Matrix kernels = canonicalize(factor);
  for (Index j = 0; j < m; ++j) kernels.col(j).normalize();
  return KernelSpace(std::move(kernels), std::move(labels), kind, gram);
}

Matrix szego_gram(std::span<const Complex> points) {
  return kernel_gram(points, [](Complex zw) { return 1.0 / (1.0 - zw); });
}

Matrix bergman_gram(std::span<const Complex> points) {
  return kernel_gram(points, [](Complex zw) {
    const Complex d = 1.0 - zw;
    return 1.0 / (d * d);
  });
}

Matrix fock_gram(std::span<const Complex> points) {
  return kernel_gram(points, [](Complex zw) { return std::exp(zw); });
}

KernelSpace build_szego(std::span<const Complex> points) {
  check_points(points);
  check_in_disc(points);
  return build_from_gram(szego_gram(points), {points.begin(), points.end()}, KernelKind::Szego);
}

KernelSpace build_bergman(std::span<const Complex> points) {
  check_points(points);
  check_in_disc(points);
  return build_from_gram(bergman_gram(points), {points.begin(), points.end()}, KernelKind::Bergman);
}

KernelSpace build_fock(std::span<const Complex> points) {
  check_points(points);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!(std::abs(points[i]) <= kFockRadius))
      throw Error(ErrorCode::PointTooLarge, "point " + std::to_string(i));
  return build_from_gram(fock_gram(points), {points.begin(), points.end()}, KernelKind::Fock);
}

KernelSpace build_orthonormal(Index n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  std::vector<Complex> labels;
  for (Index j = 0; j < n; ++j) labels.emplace_back(static_cast<double>(j), 0.0);
  return KernelSpace(Matrix::Identity(n, n), std::move(labels), KernelKind::Orthonormal,
                     Matrix::Identity(n, n));
}

Vector normalized_kernel(const KernelSpace& space, Index index) {
  if (index < 0 || index >= space.size())
    throw Error(ErrorCode::IndexOutOfRange, "kernel index " + std::to_string(index));
  return space.kernels().col(index);
}

}  // namespace berlab
