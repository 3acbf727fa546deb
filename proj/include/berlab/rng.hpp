#pragma once

#include <cstdint>
#include <limits>

#include "berlab/types.hpp"

namespace berlab {

/// SplitMix64 generator (Steele, Lea, Flood 2014), algorithm id "splitmix64-v1".
///
/// Every random quantity in the library is derived from this stream through
/// the helpers below, so results are reproducible across platforms that share
/// IEEE double arithmetic and a correctly rounded libm.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view kAlgorithm = "splitmix64-v1";

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Uses rejection to avoid modulo bias.
  std::uint64_t below(std::uint64_t n) noexcept;

  /// Standard normal via Box-Muller (one draw per call, the sine branch is discarded).
  double normal() noexcept;

  /// Complex standard normal: real and imaginary parts each N(0, 1/2).
  Complex complex_normal() noexcept;

 private:
  std::uint64_t state_;
};

/// Seed for the stream of trial `index` in a campaign seeded with `seed`.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return seed ^ index;
}

Vector random_complex_vector(SplitMix64& rng, Index n);
Vector random_unit_vector(SplitMix64& rng, Index n);
Matrix random_complex_matrix(SplitMix64& rng, Index rows, Index cols);

}  // namespace berlab
