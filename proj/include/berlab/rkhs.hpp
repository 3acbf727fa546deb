#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "berlab/types.hpp"

namespace berlab {

enum class KernelKind { Orthonormal, Szego, Bergman, Fock, Gram };

std::string_view to_string(KernelKind kind);

/// Finite reproducing kernel Hilbert space model.
///
/// Holds an index set Omega of m labelled points and, for each point, the
/// normalized reproducing kernel as a unit column of an n x m matrix. Every
/// Berezin functional in this library is an exact max/min over these m
/// columns; for a model sampled from a continuous domain the values are exact
/// for the finite model and only approximate the continuum quantities.
///
/// Immutable after construction.
class KernelSpace {
 public:
  /// Wraps an arbitrary family of unit columns. Throws InvalidInput if a
  /// column norm is off by more than 1e-12 or label count mismatches.
  KernelSpace(Matrix kernels, std::vector<Complex> labels, KernelKind kind = KernelKind::Gram,
              std::optional<Matrix> gram = std::nullopt);

  Index dim() const noexcept { return kernels_.rows(); }
  Index size() const noexcept { return kernels_.cols(); }
  KernelKind kind() const noexcept { return kind_; }

  const Matrix& kernels() const noexcept { return kernels_; }
  const std::vector<Complex>& labels() const noexcept { return labels_; }
  const std::optional<Matrix>& gram() const noexcept { return gram_; }

  /// Gram matrix of the normalized kernels, G[i][j] = <k_j, k_i>.
  Matrix induced_gram() const;

  /// Same space with points reordered: column j of the result is column order[j].
  KernelSpace permuted(std::span<const std::size_t> order) const;

 private:
  Matrix kernels_;
  std::vector<Complex> labels_;
  KernelKind kind_;
  std::optional<Matrix> gram_;
};

/// Factorizes a Hermitian PSD Gram matrix (G[i][j] = <k_j, k_i>) into
/// normalized kernel columns. The ambient dimension is the numerical rank.
KernelSpace build_from_gram(const Matrix& gram, std::vector<Complex> labels = {},
                            KernelKind kind = KernelKind::Gram);

/// Hardy space of the disc: k_w(z) = 1 / (1 - z conj(w)).
KernelSpace build_szego(std::span<const Complex> points);
/// Bergman space of the disc: k_w(z) = 1 / (1 - z conj(w))^2.
KernelSpace build_bergman(std::span<const Complex> points);
/// Fock space: k_w(z) = exp(z conj(w)).
KernelSpace build_fock(std::span<const Complex> points);
/// Standard basis of C^n, labelled 0..n-1.
KernelSpace build_orthonormal(Index n);

Matrix szego_gram(std::span<const Complex> points);
Matrix bergman_gram(std::span<const Complex> points);
Matrix fock_gram(std::span<const Complex> points);

Vector normalized_kernel(const KernelSpace& space, Index index);

inline constexpr double kDiscMargin = 1e-6;
inline constexpr double kFockRadius = 10.0;

}  // namespace berlab
