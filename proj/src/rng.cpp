#include "berlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace berlab {

std::uint64_t SplitMix64::below(std::uint64_t n) noexcept {
  if (n <= 1) return 0;
  const std::uint64_t limit = max() - max() % n;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % n;
}

double SplitMix64::normal() noexcept {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SplitMix64::complex_normal() noexcept {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Vector random_complex_vector(SplitMix64& rng, Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

Vector random_unit_vector(SplitMix64& rng, Index n) {
  for (;;) {
    Vector v = random_complex_vector(rng, n);
    const double norm = v.norm();
    if (norm > 1e-300) return v / norm;
  }
}

Matrix random_complex_matrix(SplitMix64& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  return m;
}

}  // namespace berlab
