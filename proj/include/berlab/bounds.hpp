#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berlab/berezin.hpp"
#include "berlab/operator.hpp"
#include "berlab/rkhs.hpp"

namespace berlab {

/// Registry of the Davis-Wielandt(-Berezin) radius inequalities. The string
/// form (to_string) is the stable identifier used in reports and on the CLI.
enum class BoundId {
  Eqn0Lower,   // B-EQN0-L
  Eqn0Upper,   // B-EQN0-U
  Eqn1,        // B-EQN1
  T1i,         // B-T1-i
  T1ii,        // B-T1-ii
  T1iii,       // B-T1-iii
  T2,          // B-T2
  T2FixedPi,   // B-T2-FIXED-PI
  T3Upper,     // B-T3-U
  T3Lower,     // B-T3-L
  T5,          // B-T5
  C1,          // B-C1
  T6,          // B-T6
  C2,          // B-C2
  RmkNormal,   // B-RMK-NORMAL
  T7,          // B-T7
  C3,          // B-C3
  T8,          // B-T8
  T9,          // B-T9
  C4i,         // B-C4-i
  C4ii,        // B-C4-ii
  T10,         // B-T10
  Sum,         // B-SUM
  SumOrth,     // B-SUM-ORTH
};

std::string_view to_string(BoundId id);
/// Throws UnknownBoundId.
BoundId parse_bound_id(std::string_view text);
std::span<const BoundId> all_bounds();
bool needs_second_operand(BoundId id);

struct OptimizerConfig {
  int theta_grid = 1024;
  int alpha_grid = 257;
  double refine_tol = 1e-8;
  std::vector<double> r_values{1.0, 1.5, 2.0, 3.0};
  double tol = 1e-9;
  DwSearchOptions dw;
};

struct BoundParams {
  std::optional<double> theta_star;
  std::optional<double> alpha_star;
  std::optional<double> r;
};

/// One inequality lhs <= rhs. Chained or multi-instance bounds have several.
struct BoundSide {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = true;
  BoundParams params;
};

/// Outcome of one bound on one instance. The top-level lhs/rhs/slack/params
/// are copied from the side with the smallest relative slack; `satisfied`
/// holds only if every side is satisfied.
struct BoundEvaluation {
  BoundId id = BoundId::Eqn1;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = true;
  BoundParams params;
  std::optional<std::size_t> argmax_index;
  std::vector<BoundSide> sides;
};

/// slack >= -tol * max(|lhs|, |rhs|, 1)
bool within_tolerance(double lhs, double rhs, double tol);

/// Evaluates registry bounds for a fixed (A, S[, B]) instance.
///
/// Spectral data of A*A and AA* and the Berezin profile of A are computed
/// once at construction; evaluate() is const and may be called concurrently.
class BoundEvaluator {
 public:
  BoundEvaluator(Operator a, KernelSpace space, std::optional<Operator> b = std::nullopt,
                 OptimizerConfig cfg = {});

  BoundEvaluation evaluate(BoundId id) const;

  const Operator& a() const noexcept { return a_; }
  const KernelSpace& space() const noexcept { return space_; }
  const OptimizerConfig& config() const noexcept { return cfg_; }

  double eta_value() const noexcept { return eta_.value; }

  // Right-hand sides at a fixed parameter value.
  double t2_rhs(double theta) const;
  double t2_fixed_pi_rhs() const;
  double t5_rhs(double alpha) const;
  double t6_rhs(double r, double alpha) const;
  double normal_rhs(double alpha) const;
  double t7_rhs(double alpha) const;
  double c3_rhs() const;
  double t8_rhs(double alpha) const;
  double t9_beta1(double alpha) const;
  double t9_beta2(double alpha) const;
  double t10_gamma1(double alpha) const;
  double t10_gamma2(double alpha) const;

 private:
  double bnorm(const Operator& op) const { return berezin_norm(op, space_); }
  double bnum(const Operator& op) const { return ber(op, space_); }
  double bleast(const Operator& op) const { return least_ber(op, space_); }
  Operator abs_pow(double p) const;      // |A|^p
  Operator abs_adj_pow(double p) const;  // |A*|^p

  BoundSide upper_side(std::string label, double lhs, double rhs, BoundParams params = {}) const;
  BoundEvaluation finish(BoundId id, std::vector<BoundSide> sides,
                         std::optional<std::size_t> argmax) const;
  const Operator& require_b(BoundId id) const;

  Operator a_;
  KernelSpace space_;
  std::optional<Operator> b_;
  OptimizerConfig cfg_;

  Operator ata_;
  Operator aat_;
  PsdSpectrum ata_spec_;
  PsdSpectrum aat_spec_;
  BerezinProfile profile_;
  Extremum eta_;
  double ber_a_ = 0.0;
  double least_a_ = 0.0;
  double ata_ber_norm_ = 0.0;
  double ata_least_ = 0.0;
};

/// Convenience wrapper: builds a BoundEvaluator and evaluates one id.
BoundEvaluation evaluate_bound(BoundId id, const Operator& a, const KernelSpace& space,
                               const Operator* b, const OptimizerConfig& cfg = {});

/// Re <A k, B k> == 0 for every kernel, to 1e-10 * max(1, ||A k|| ||B k||).
bool real_orthogonal_on_kernels(const Operator& a, const Operator& b, const KernelSpace& space);

}  // namespace berlab
