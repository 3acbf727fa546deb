#pragma once

#include <string_view>

#include "berlab/operator.hpp"
#include "berlab/rkhs.hpp"
#include "berlab/rng.hpp"

namespace berlab {

enum class OperatorKind { Gaussian, Hermitian, Unitary, NilpotentShift, Normal };

std::string_view to_string(OperatorKind kind);

/// Gaussian with probability 0.8, otherwise one of the four structured kinds uniformly.
OperatorKind draw_operator_kind(SplitMix64& rng);

/// Gaussian: i.i.d. complex standard normal entries times scale / sqrt(dim).
/// Hermitian: (G + G*) / 2 times scale / sqrt(dim).
/// Unitary: scale * Q from a QR factorization of a Gaussian matrix.
/// NilpotentShift: scale on the superdiagonal.
/// Normal: U diag(d) U* with unitary U and complex normal d times scale.
Operator random_operator(SplitMix64& rng, Index dim, double scale, OperatorKind kind);

/// Draws the kind with draw_operator_kind, then the operator.
Operator random_operator(SplitMix64& rng, Index dim, double scale);

Matrix random_unitary(SplitMix64& rng, Index dim);

/// B = i A (c0 I + c1 A*A) with real c0, c1, so Re<A x, B x> = 0 for every x.
Operator orthogonal_partner(SplitMix64& rng, const Operator& a);

/// Points uniform in the disc of the given radius.
std::vector<Complex> random_disc_points(SplitMix64& rng, std::size_t count, double radius);

/// Gram of `m` random vectors in C^n (rank min(n, m)).
Matrix random_gram(SplitMix64& rng, Index n, Index m);

}  // namespace berlab
