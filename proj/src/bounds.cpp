#include "berlab/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "berlab/optimize.hpp"

namespace berlab {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 24> kNames{{
    {BoundId::Eqn0Lower, "B-EQN0-L"},
    {BoundId::Eqn0Upper, "B-EQN0-U"},
    {BoundId::Eqn1, "B-EQN1"},
    {BoundId::T1i, "B-T1-i"},
    {BoundId::T1ii, "B-T1-ii"},
    {BoundId::T1iii, "B-T1-iii"},
    {BoundId::T2, "B-T2"},
    {BoundId::T2FixedPi, "B-T2-FIXED-PI"},
    {BoundId::T3Upper, "B-T3-U"},
    {BoundId::T3Lower, "B-T3-L"},
    {BoundId::T5, "B-T5"},
    {BoundId::C1, "B-C1"},
    {BoundId::T6, "B-T6"},
    {BoundId::C2, "B-C2"},
    {BoundId::RmkNormal, "B-RMK-NORMAL"},
    {BoundId::T7, "B-T7"},
    {BoundId::C3, "B-C3"},
    {BoundId::T8, "B-T8"},
    {BoundId::T9, "B-T9"},
    {BoundId::C4i, "B-C4-i"},
    {BoundId::C4ii, "B-C4-ii"},
    {BoundId::T10, "B-T10"},
    {BoundId::Sum, "B-SUM"},
    {BoundId::SumOrth, "B-SUM-ORTH"},
}};

constexpr std::array<BoundId, 24> kAll = [] {
  std::array<BoundId, 24> ids{};
  for (std::size_t i = 0; i < kNames.size(); ++i) ids[i] = kNames[i].first;
  return ids;
}();

double sq(double x) { return x * x; }

double scale_of(double lhs, double rhs) { return std::max({std::abs(lhs), std::abs(rhs), 1.0}); }

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "B-UNKNOWN";
}

BoundId parse_bound_id(std::string_view text) {
  for (const auto& [k, name] : kNames)
    if (name == text) return k;
  throw Error(ErrorCode::UnknownBoundId, std::string(text));
}

std::span<const BoundId> all_bounds() { return kAll; }

bool needs_second_operand(BoundId id) { return id == BoundId::Sum || id == BoundId::SumOrth; }

bool within_tolerance(double lhs, double rhs, double tol) {
  return rhs - lhs >= -tol * scale_of(lhs, rhs);
}

bool real_orthogonal_on_kernels(const Operator& a, const Operator& b, const KernelSpace& space) {
  if (a.dim() != space.dim() || b.dim() != space.dim())
    throw Error(ErrorCode::DimensionMismatch, "operands and space must share a dimension");
  const Matrix ak = a.matrix() * space.kernels();
  const Matrix bk = b.matrix() * space.kernels();
  for (Index j = 0; j < space.size(); ++j) {
    const double re = inner(ak.col(j), bk.col(j)).real();
    if (std::abs(re) > 1e-10 * std::max(1.0, ak.col(j).norm() * bk.col(j).norm())) return false;
  }
  return true;
}

BoundEvaluator::BoundEvaluator(Operator a, KernelSpace space, std::optional<Operator> b,
                               OptimizerConfig cfg)
    : a_(std::move(a)),
      space_(std::move(space)),
      b_(std::move(b)),
      cfg_(std::move(cfg)),
      ata_(a_.adjoint() * a_),
      aat_(a_ * a_.adjoint()),
      ata_spec_(ata_),
      aat_spec_(aat_),
      profile_(berezin_profile(a_, space_)) {
  if (b_ && b_->dim() != a_.dim())
    throw Error(ErrorCode::DimensionMismatch, "second operand has a different dimension");
  eta_ = eta_extremum(profile_);
  ber_a_ = ber_extremum(profile_).value;
  least_a_ = least_ber_extremum(profile_).value;
  ata_ber_norm_ = bnorm(ata_);
  ata_least_ = bleast(ata_);
}

Operator BoundEvaluator::abs_pow(double p) const { return ata_spec_.power(0.5 * p); }

Operator BoundEvaluator::abs_adj_pow(double p) const { return aat_spec_.power(0.5 * p); }

double BoundEvaluator::t2_rhs(double theta) const {
  const Operator shifted = ata_ + std::polar(1.0, theta) * a_;
  return sq(bnum(shifted)) + 2.0 * ata_ber_norm_ * ber_a_;
}

double BoundEvaluator::t2_fixed_pi_rhs() const {
  return sq(bnum(ata_ - a_)) + 2.0 * ata_ber_norm_ * ber_a_;
}

double BoundEvaluator::t5_rhs(double alpha) const {
  const Operator x = abs_pow(2.0 * alpha);
  const Operator y = abs_adj_pow(2.0 * (1.0 - alpha));
  const Operator two_abs2 = 2.0 * abs_pow(2.0);
  return 0.25 * sq(bnorm(x + y)) + 0.25 * bnum(two_abs2 + x - y) * bnum(two_abs2 - x + y);
}

double BoundEvaluator::t6_rhs(double r, double alpha) const {
  const Operator abs4r = abs_pow(4.0 * r);
  return std::pow(2.0, 2.0 * r - 2.0) * bnorm(abs_pow(4.0 * alpha * r) + abs4r) *
         bnorm(abs_adj_pow(4.0 * (1.0 - alpha) * r) + abs4r);
}

double BoundEvaluator::normal_rhs(double alpha) const {
  const Operator abs4 = abs_pow(4.0);
  return std::sqrt(bnorm(abs_pow(4.0 * alpha) + abs4)) *
         std::sqrt(bnorm(abs_pow(4.0 * (1.0 - alpha)) + abs4));
}

double BoundEvaluator::t7_rhs(double alpha) const {
  const Operator x = abs_pow(2.0 * alpha);
  const Operator y = abs_adj_pow(2.0 * (1.0 - alpha));
  const Operator s = x + y;
  return 0.5 * bnorm(s * s + 2.0 * abs_pow(4.0)) - bleast(x) * bleast(y);
}

double BoundEvaluator::c3_rhs() const {
  const Operator x = abs_pow(1.0);
  const Operator y = abs_adj_pow(1.0);
  const Operator s = x + y;
  return bnorm(s * s + 2.0 * abs_pow(4.0)) - bleast(x) * bleast(y);
}

double BoundEvaluator::t8_rhs(double alpha) const {
  return bnorm(alpha * abs_pow(2.0) + (1.0 - alpha) * abs_adj_pow(2.0) + abs_pow(4.0));
}

double BoundEvaluator::t9_beta1(double alpha) const {
  return 0.5 * alpha * bnum(a_ * a_) +
         bnorm(0.25 * alpha * abs_pow(2.0) + (1.0 - 0.75 * alpha) * abs_adj_pow(2.0) + abs_pow(4.0));
}

double BoundEvaluator::t9_beta2(double alpha) const {
  return 0.5 * alpha * bnum(a_ * a_) +
         bnorm((1.0 - 0.75 * alpha) * abs_pow(2.0) + 0.25 * alpha * abs_adj_pow(2.0) + abs_pow(4.0));
}

double BoundEvaluator::t10_gamma1(double alpha) const {
  const Operator mean = 0.5 * (abs_pow(1.0) + abs_adj_pow(1.0));
  return bnorm(alpha * (mean * mean) + (1.0 - alpha) * abs_pow(2.0) + abs_pow(4.0));
}

double BoundEvaluator::t10_gamma2(double alpha) const {
  const Operator mean = 0.5 * (abs_pow(1.0) + abs_adj_pow(1.0));
  return bnorm(alpha * (mean * mean) + (1.0 - alpha) * abs_adj_pow(2.0) + abs_pow(4.0));
}

BoundSide BoundEvaluator::upper_side(std::string label, double lhs, double rhs,
                                     BoundParams params) const {
  return {std::move(label), lhs, rhs, rhs - lhs, within_tolerance(lhs, rhs, cfg_.tol),
          std::move(params)};
}

BoundEvaluation BoundEvaluator::finish(BoundId id, std::vector<BoundSide> sides,
                                       std::optional<std::size_t> argmax) const {
  BoundEvaluation ev;
  ev.id = id;
  ev.argmax_index = argmax;
  std::size_t worst = 0;
  double worst_rel = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const double rel = sides[i].slack / scale_of(sides[i].lhs, sides[i].rhs);
    if (rel < worst_rel || std::isnan(rel)) {
      worst_rel = rel;
      worst = i;
    }
    ev.satisfied = ev.satisfied && sides[i].satisfied;
  }
  ev.lhs = sides[worst].lhs;
  ev.rhs = sides[worst].rhs;
  ev.slack = sides[worst].slack;
  ev.params = sides[worst].params;
  ev.sides = std::move(sides);
  return ev;
}

const Operator& BoundEvaluator::require_b(BoundId id) const {
  if (!b_) throw Error(ErrorCode::MissingSecondOperand, std::string(to_string(id)));
  return *b_;
}

BoundEvaluation BoundEvaluator::evaluate(BoundId id) const {
  const double eta2 = sq(eta_.value);
  const std::size_t at = eta_.index;
  const auto alpha_min = [&](auto&& f) {
    return minimize_scalar(f, 0.0, 1.0, cfg_.alpha_grid, cfg_.refine_tol);
  };

  switch (id) {
    case BoundId::Eqn0Lower:
    case BoundId::Eqn0Upper: {
      const double w = numerical_radius(a_, cfg_.refine_tol).value;
      const double norm = operator_norm(a_).value;
      const double dw = dw_lower_estimate(a_, &space_, cfg_.dw).value;
      if (id == BoundId::Eqn0Lower)
        return finish(id, {upper_side("max{w,|A|^2} <= dw", std::max(w, sq(norm)), dw)}, std::nullopt);
      return finish(id, {upper_side("dw <= sqrt(w^2+|A|^4)", dw, std::sqrt(sq(w) + sq(sq(norm))))},
                    std::nullopt);
    }
    case BoundId::Eqn1:
      return finish(id,
                    {upper_side("max{ber,|A*A|_ber} <= eta", std::max(ber_a_, ata_ber_norm_), eta_.value),
                     upper_side("eta <= sqrt(ber^2+|A*A|_ber^2)", eta_.value,
                                std::sqrt(sq(ber_a_) + sq(ata_ber_norm_)))},
                    at);
    case BoundId::T1i:
      return finish(id,
                    {upper_side("lower", std::max(sq(least_a_) + sq(ata_ber_norm_), sq(ber_a_) + sq(ata_least_)),
                                eta2)},
                    at);
    case BoundId::T1ii:
      return finish(id,
                    {upper_side("lower", 2.0 * std::max(ber_a_ * ata_least_, least_a_ * ata_ber_norm_), eta2)},
                    at);
    case BoundId::T1iii:
      return finish(id,
                    {upper_side("lower",
                                std::max(sq(least_a_) * (1.0 + ata_ber_norm_), sq(ber_a_) * (1.0 + ata_least_)),
                                eta2)},
                    at);
    case BoundId::T2: {
      const auto best = minimize_scalar([&](double t) { return t2_rhs(t); }, 0.0, 2.0 * std::numbers::pi,
                                        cfg_.theta_grid, cfg_.refine_tol, true);
      return finish(id, {upper_side("min over theta", eta2, best.value, {.theta_star = best.argmin})}, at);
    }
    case BoundId::T2FixedPi:
      return finish(id, {upper_side("theta = pi", eta2, t2_fixed_pi_rhs(), {.theta_star = std::numbers::pi})},
                    at);
    case BoundId::T3Upper: {
      const Operator plus = a_ + ata_;
      const Operator minus = a_ - ata_;
      return finish(id, {upper_side("upper", eta2, 0.5 * (sq(bnum(plus)) + sq(bnum(minus))))}, at);
    }
    case BoundId::T3Lower: {
      const Operator plus = a_ + ata_;
      const Operator minus = a_ - ata_;
      const double lhs =
          0.5 * std::max(sq(bnum(plus)) + sq(bleast(minus)), sq(bnum(minus)) + sq(bleast(plus)));
      return finish(id, {upper_side("lower", lhs, eta2)}, at);
    }
    case BoundId::T5: {
      const auto best = alpha_min([&](double al) { return t5_rhs(al); });
      return finish(id, {upper_side("min over alpha", eta2, best.value, {.alpha_star = best.argmin})}, at);
    }
    case BoundId::C1:
      return finish(id, {upper_side("alpha = 1/2", eta2, t5_rhs(0.5), {.alpha_star = 0.5})}, at);
    case BoundId::T6: {
      std::vector<BoundSide> sides;
      for (double r : cfg_.r_values) {
        if (r < 1.0) throw Error(ErrorCode::InvalidConfig, "B-T6 needs r >= 1");
        const auto best = alpha_min([&](double al) { return t6_rhs(r, al); });
        sides.push_back(upper_side("r = " + std::to_string(r), std::pow(eta_.value, 4.0 * r), best.value,
                                   {.alpha_star = best.argmin, .r = r}));
      }
      if (sides.empty()) throw Error(ErrorCode::InvalidConfig, "B-T6 needs at least one r value");
      return finish(id, std::move(sides), at);
    }
    case BoundId::C2: {
      const auto best = alpha_min([&](double al) { return t6_rhs(1.0, al); });
      const double eta4 = sq(eta2);
      return finish(id,
                    {upper_side("min over alpha", eta4, best.value, {.alpha_star = best.argmin, .r = 1.0}),
                     upper_side("alpha = 1/2", eta4, t6_rhs(1.0, 0.5), {.alpha_star = 0.5, .r = 1.0})},
                    at);
    }
    case BoundId::RmkNormal: {
      if (!is_normal(a_)) throw Error(ErrorCode::NotNormal, "B-RMK-NORMAL requires a normal operator");
      const auto best = alpha_min([&](double al) { return normal_rhs(al); });
      return finish(id, {upper_side("min over alpha", eta2, best.value, {.alpha_star = best.argmin})}, at);
    }
    case BoundId::T7: {
      const auto best = alpha_min([&](double al) { return t7_rhs(al); });
      return finish(id, {upper_side("min over alpha", eta2, best.value, {.alpha_star = best.argmin})}, at);
    }
    case BoundId::C3:
      return finish(id, {upper_side("as printed", eta2, c3_rhs(), {.alpha_star = 0.5})}, at);
    case BoundId::T8: {
      const auto best = alpha_min([&](double al) { return t8_rhs(al); });
      return finish(id, {upper_side("min over alpha", eta2, best.value, {.alpha_star = best.argmin})}, at);
    }
    case BoundId::T9: {
      const auto b1 = alpha_min([&](double al) { return t9_beta1(al); });
      const auto b2 = alpha_min([&](double al) { return t9_beta2(al); });
      const auto& best = b1.value <= b2.value ? b1 : b2;
      return finish(id, {upper_side(b1.value <= b2.value ? "beta1" : "beta2", eta2, best.value,
                                    {.alpha_star = best.argmin})},
                    at);
    }
    case BoundId::C4i:
      return finish(id, {upper_side("min{alpha=0 forms}", eta2, std::min(t9_beta1(0.0), t9_beta2(0.0)))}, at);
    case BoundId::C4ii: {
      const double rhs = 0.25 * bnorm(abs_pow(2.0) + abs_adj_pow(2.0) + 4.0 * abs_pow(4.0)) +
                         0.5 * bnum(a_ * a_);
      return finish(id, {upper_side("alpha = 1", eta2, rhs, {.alpha_star = 1.0})}, at);
    }
    case BoundId::T10: {
      const auto g1 = alpha_min([&](double al) { return t10_gamma1(al); });
      const auto g2 = alpha_min([&](double al) { return t10_gamma2(al); });
      const auto& best = g1.value <= g2.value ? g1 : g2;
      return finish(id, {upper_side(g1.value <= g2.value ? "gamma1" : "gamma2", eta2, best.value,
                                    {.alpha_star = best.argmin})},
                    at);
    }
    case BoundId::Sum:
    case BoundId::SumOrth: {
      const Operator& b = require_b(id);
      if (id == BoundId::SumOrth && !real_orthogonal_on_kernels(a_, b, space_))
        throw Error(ErrorCode::NotOrthogonal, "Re<A k, B k> is not zero on every kernel");
      const Extremum sum = eta_extremum(berezin_profile(a_ + b, space_));
      double rhs = eta_.value + eta(b, space_);
      if (id == BoundId::Sum) rhs += bnum(a_.adjoint() * b + b.adjoint() * a_);
      return finish(id, {upper_side("sum", sum.value, rhs)}, sum.index);
    }
  }
  throw Error(ErrorCode::UnknownBoundId, "unhandled bound id");
}

BoundEvaluation evaluate_bound(BoundId id, const Operator& a, const KernelSpace& space,
                               const Operator* b, const OptimizerConfig& cfg) {
  if (a.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "operator and space dimensions differ");
  if (needs_second_operand(id) && !b) throw Error(ErrorCode::MissingSecondOperand, std::string(to_string(id)));
  if (b && b->dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "second operand dimension differs");
  std::optional<Operator> second;
  if (b) second = *b;
  return BoundEvaluator(a, space, std::move(second), cfg).evaluate(id);
}

}  // namespace berlab
