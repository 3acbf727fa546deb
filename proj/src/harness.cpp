#include "berlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "berlab/berezin.hpp"

namespace berlab {

namespace {

constexpr std::pair<SpaceKind, std::string_view> kSpaceNames[] = {
    {SpaceKind::Orthonormal, "orthonormal"}, {SpaceKind::Szego, "szego"},
    {SpaceKind::Bergman, "bergman"},         {SpaceKind::Fock, "fock"},
    {SpaceKind::RandomGram, "random_gram"},
};

template <class T>
const T& pick(SplitMix64& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(rng.below(items.size()))];
}

KernelSpace draw_space(SplitMix64& rng, SpaceKind kind, Index n, Index m) {
  switch (kind) {
    case SpaceKind::Orthonormal:
      return build_orthonormal(n);
    case SpaceKind::Szego:
      return build_szego(random_disc_points(rng, static_cast<std::size_t>(n), 0.9));
    case SpaceKind::Bergman:
      return build_bergman(random_disc_points(rng, static_cast<std::size_t>(n), 0.9));
    case SpaceKind::Fock:
      return build_fock(random_disc_points(rng, static_cast<std::size_t>(n), 1.5));
    case SpaceKind::RandomGram:
      return build_from_gram(random_gram(rng, n, std::max(n, m)));
  }
  throw Error(ErrorCode::InvalidConfig, "unknown space kind");
}

Json provenance_of(const TrialInstance& t) {
  Json j;
  j["space_kind"] = std::string(to_string(t.space_kind));
  j["operator_kind"] = std::string(to_string(t.operator_kind));
  j["scale"] = t.scale;
  j["space"] = space_to_json(t.space);
  j["operator"] = operator_to_json(t.a);
  return j;
}

}  // namespace

std::string_view to_string(SpaceKind kind) {
  for (const auto& [k, name] : kSpaceNames)
    if (k == kind) return name;
  return "orthonormal";
}

SpaceKind parse_space_kind(std::string_view text) {
  for (const auto& [k, name] : kSpaceNames)
    if (name == text) return k;
  throw Error(ErrorCode::InvalidConfig, "unknown kernel kind \"" + std::string(text) + "\"");
}

void SuiteConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
  if (dims.empty()) throw Error(ErrorCode::InvalidConfig, "dims must not be empty");
  for (Index d : dims)
    if (d < 1) throw Error(ErrorCode::InvalidConfig, "dims must be >= 1");
  if (omega_sizes.empty()) throw Error(ErrorCode::InvalidConfig, "omega sizes must not be empty");
  for (Index m : omega_sizes)
    if (m < 1) throw Error(ErrorCode::InvalidConfig, "omega sizes must be >= 1");
  if (kernel_kinds.empty()) throw Error(ErrorCode::InvalidConfig, "kernel kinds must not be empty");
  if (bounds.empty()) throw Error(ErrorCode::InvalidConfig, "bound selection must not be empty");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidConfig, "tol must be > 0");
  if (dw_restarts < 0) throw Error(ErrorCode::InvalidConfig, "dw restarts must be >= 0");
}

OptimizerConfig optimizer_config_for(const SuiteConfig& cfg, std::uint64_t stream_seed) {
  OptimizerConfig opt;
  opt.tol = cfg.tol;
  opt.dw.restarts = cfg.dw_restarts;
  opt.dw.seed = stream_seed;
  return opt;
}

TrialInstance draw_trial(const SuiteConfig& cfg, int trial) {
  const std::uint64_t stream = derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  SplitMix64 rng(stream);
  const SpaceKind kind = pick(rng, cfg.kernel_kinds);
  const Index n = pick(rng, cfg.dims);
  const Index m = pick(rng, cfg.omega_sizes);
  KernelSpace space = draw_space(rng, kind, n, m);
  const Index dim = space.dim();
  const double scale = std::exp(rng.uniform(std::log(0.25), std::log(4.0)));
  const OperatorKind op_kind = draw_operator_kind(rng);
  Operator a = random_operator(rng, dim, scale, op_kind);
  Operator b = random_operator(rng, dim, std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
  Operator orth = orthogonal_partner(rng, a);
  return TrialInstance{.trial = trial,
                       .stream_seed = stream,
                       .space_kind = kind,
                       .operator_kind = op_kind,
                       .scale = scale,
                       .space = std::move(space),
                       .a = std::move(a),
                       .sum_partner = std::move(b),
                       .orthogonal_partner = std::move(orth)};
}

long SuiteReport::total_checked() const {
  long n = 0;
  for (const auto& s : bounds) n += s.checked;
  return n;
}

long SuiteReport::total_violations() const {
  long n = 0;
  for (const auto& s : bounds) n += s.violations;
  return n;
}

long SuiteReport::total_errors() const {
  long n = 0;
  for (const auto& s : bounds) n += s.errors;
  return n;
}

const BoundStats* SuiteReport::stats(BoundId id) const {
  for (const auto& s : bounds)
    if (s.id == id) return &s;
  return nullptr;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  SuiteReport report;
  report.config = cfg;
  for (BoundId id : all_bounds())
    if (std::find(cfg.bounds.begin(), cfg.bounds.end(), id) != cfg.bounds.end())
      report.bounds.push_back(BoundStats{.id = id});

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const TrialInstance t = draw_trial(cfg, trial);
    const OptimizerConfig opt = optimizer_config_for(cfg, t.stream_seed);
    const BoundEvaluator main_eval(t.a, t.space, t.sum_partner, opt);
    std::optional<BoundEvaluator> orth_eval;
    const bool normal = is_normal(t.a);

    for (BoundStats& stats : report.bounds) {
      if (stats.id == BoundId::RmkNormal && !normal) continue;
      ++stats.checked;
      try {
        BoundEvaluation ev;
        if (stats.id == BoundId::SumOrth) {
          if (!orth_eval) orth_eval.emplace(t.a, t.space, t.orthogonal_partner, opt);
          ev = orth_eval->evaluate(stats.id);
        } else {
          ev = main_eval.evaluate(stats.id);
        }
        if (!stats.min_slack || ev.slack < *stats.min_slack) {
          stats.min_slack = ev.slack;
          stats.min_slack_instance = SlackWitness{trial, t.stream_seed, ev.params};
        }
        if (!ev.satisfied) {
          ++stats.violations;
          double worst = 0.0;
          for (const BoundSide& s : ev.sides) worst = std::max(worst, s.lhs - s.rhs);
          stats.worst_violation = std::max(stats.worst_violation, worst);
          Json prov = provenance_of(t);
          if (needs_second_operand(stats.id))
            prov["second_operand"] = operator_to_json(stats.id == BoundId::SumOrth ? t.orthogonal_partner
                                                                                    : t.sum_partner);
          report.failures.push_back({trial, t.stream_seed, stats.id, ev, {}, std::move(prov)});
        }
      } catch (const std::exception& e) {
        ++stats.errors;
        report.failures.push_back({trial, t.stream_seed, stats.id, std::nullopt, e.what(), provenance_of(t)});
      }
    }
  }

  auto order = [](BoundId id) {
    const auto all = all_bounds();
    return std::find(all.begin(), all.end(), id) - all.begin();
  };
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [&](const FailureRecord& l, const FailureRecord& r) {
                     if (order(l.id) != order(r.id)) return order(l.id) < order(r.id);
                     return l.trial < r.trial;
                   });
  return report;
}

Json config_to_json(const SuiteConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["dims"] = cfg.dims;
  j["omega_sizes"] = cfg.omega_sizes;
  Json kinds = Json::array();
  for (SpaceKind k : cfg.kernel_kinds) kinds.push_back(std::string(to_string(k)));
  j["kernel_kinds"] = std::move(kinds);
  Json bounds = Json::array();
  for (BoundId id : cfg.bounds) bounds.push_back(std::string(to_string(id)));
  j["bounds"] = std::move(bounds);
  j["tol"] = cfg.tol;
  j["dw_restarts"] = cfg.dw_restarts;
  return j;
}

Json report_to_json(const SuiteReport& report) {
  Json j;
  j["format"] = "berlab-report-v1";
  j["rng"] = std::string(SplitMix64::kAlgorithm);
  j["config"] = config_to_json(report.config);
  Json summary;
  summary["checked"] = report.total_checked();
  summary["violations"] = report.total_violations();
  summary["errors"] = report.total_errors();
  summary["ok"] = report.ok();
  j["summary"] = std::move(summary);

  Json bounds = Json::array();
  for (const BoundStats& s : report.bounds) {
    Json b;
    b["bound_id"] = std::string(to_string(s.id));
    b["checked"] = s.checked;
    b["violations"] = s.violations;
    b["errors"] = s.errors;
    b["worst_violation"] = s.worst_violation;
    b["min_slack"] = s.min_slack ? Json(*s.min_slack) : Json(nullptr);
    if (s.min_slack_instance) {
      Json w;
      w["trial"] = s.min_slack_instance->trial;
      w["seed"] = s.min_slack_instance->stream_seed;
      w["params"] = params_to_json(s.min_slack_instance->params);
      b["min_slack_instance"] = std::move(w);
    } else {
      b["min_slack_instance"] = nullptr;
    }
    bounds.push_back(std::move(b));
  }
  j["bounds"] = std::move(bounds);

  Json failures = Json::array();
  for (const FailureRecord& f : report.failures) {
    Json fj;
    fj["bound_id"] = std::string(to_string(f.id));
    fj["trial"] = f.trial;
    fj["seed"] = f.stream_seed;
    fj["evaluation"] = f.evaluation ? evaluation_to_json(*f.evaluation) : Json(nullptr);
    fj["error"] = f.error.empty() ? Json(nullptr) : Json(f.error);
    fj["provenance"] = f.provenance;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  return j;
}

// Fixtures ------------------------------------------------------------------

namespace {

struct FixtureBuilder {
  FixtureReport report;

  void expect(std::string quantity, double expected, double actual, double tolerance) {
    report.checks.push_back({std::move(quantity), expected, actual, tolerance,
                             std::abs(expected - actual) <= tolerance});
  }
};

Operator nilpotent2() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return Operator(std::move(m));
}

FixtureReport minus_identity() {
  FixtureBuilder fb;
  fb.report.name = "minus-identity";
  const Complex pts[] = {{0.0, 0.0}, {0.5, 0.0}};
  const KernelSpace space = build_szego(pts);
  const Operator a = -Operator::identity(space.dim());
  const BoundEvaluator ev(a, space);

  const BoundEvaluation t2 = ev.evaluate(BoundId::T2);
  const BoundEvaluation t2pi = ev.evaluate(BoundId::T2FixedPi);
  fb.expect("B-T2 rhs", 2.0, t2.rhs, 1e-9);
  fb.expect("B-T2 theta_star", 0.0, t2.params.theta_star.value_or(-1.0), 1e-9);
  fb.expect("B-T2 lhs (eta^2)", 2.0, t2.lhs, 1e-9);
  fb.expect("B-T2-FIXED-PI rhs", 6.0, t2pi.rhs, 1e-9);
  fb.expect("ber", 1.0, ber(a, space), 1e-12);
  fb.expect("eta", std::numbers::sqrt2, eta(a, space), 1e-12);
  fb.report.evaluations = {t2, t2pi, ev.evaluate(BoundId::Eqn1)};
  return fb.report;
}

FixtureReport nilpotent_orthonormal() {
  FixtureBuilder fb;
  fb.report.name = "nilpotent-orthonormal";
  const KernelSpace space = build_orthonormal(2);
  const Operator a = nilpotent2();
  const BoundEvaluator ev(a, space);
  const BoundEvaluation eqn1 = ev.evaluate(BoundId::Eqn1);
  fb.expect("eta", 1.0, eta(a, space), 1e-12);
  fb.expect("ber", 0.0, ber(a, space), 1e-12);
  fb.expect("|A*A|_ber", 1.0, berezin_norm(a.adjoint() * a, space), 1e-12);
  fb.expect("|A|_ber", 1.0, berezin_norm(a, space), 1e-12);
  for (const BoundSide& s : eqn1.sides) fb.expect("B-EQN1 slack (" + s.label + ")", 0.0, s.slack, 1e-12);
  fb.report.evaluations = {eqn1};
  return fb.report;
}

FixtureReport identity_fixture() {
  FixtureBuilder fb;
  fb.report.name = "identity";
  const KernelSpace space = build_orthonormal(2);
  const Operator a = Operator::identity(2);
  fb.expect("eta", std::numbers::sqrt2, eta(a, space), 1e-12);
  fb.expect("ber", 1.0, ber(a, space), 1e-12);
  fb.report.evaluations = {BoundEvaluator(a, space).evaluate(BoundId::Eqn1)};
  return fb.report;
}

}  // namespace

bool FixtureReport::passed() const {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  for (const auto& e : evaluations) ok = ok && e.satisfied;
  return ok;
}

std::vector<std::string> fixture_names() { return {"minus-identity", "nilpotent-orthonormal", "identity"}; }

FixtureReport replay_fixture(std::string_view name) {
  if (name == "minus-identity") return minus_identity();
  if (name == "nilpotent-orthonormal") return nilpotent_orthonormal();
  if (name == "identity") return identity_fixture();
  throw Error(ErrorCode::UnknownFixture, std::string(name));
}

Json fixture_to_json(const FixtureReport& report) {
  Json j;
  j["name"] = report.name;
  j["passed"] = report.passed();
  Json checks = Json::array();
  for (const FixtureCheck& c : report.checks) {
    Json cj;
    cj["quantity"] = c.quantity;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["tolerance"] = c.tolerance;
    cj["passed"] = c.passed;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  Json evs = Json::array();
  for (const BoundEvaluation& e : report.evaluations) evs.push_back(evaluation_to_json(e));
  j["evaluations"] = std::move(evs);
  return j;
}

}  // namespace berlab
