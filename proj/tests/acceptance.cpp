// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: berlab_acceptance <path to berlab cli> <scratch dir>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "berlab/harness.hpp"
#include "berlab/lemmas.hpp"
#include "berlab/optimize.hpp"

using namespace berlab;

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr int kTrials = 500;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

int failures = 0;

void report(int n, const std::string& title, Outcome& o, double seconds, double limit) {
  if (seconds > limit) o.fail("runtime " + std::to_string(seconds) + " s over " + std::to_string(limit) + " s");
  std::printf("criterion %d %s: %s (%.2f s)%s%s\n", n, title.c_str(), o.pass ? "PASS" : "FAIL", seconds,
              o.note.str().empty() ? "" : " - ", o.note.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteConfig campaign(std::vector<BoundId> bounds) {
  SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.trials = kTrials;
  cfg.bounds = std::move(bounds);
  return cfg;
}

void describe_violations(const SuiteReport& r, Outcome& o) {
  std::ostringstream s;
  s << r.total_violations() << " violations, " << r.total_errors() << " errors";
  for (const FailureRecord& f : r.failures) {
    s << "; first " << to_string(f.id) << " trial " << f.trial << (f.error.empty() ? "" : " " + f.error);
    break;
  }
  o.fail(s.str());
}

void minus_identity() {
  Outcome o;
  const double secs = timed([&] {
    SplitMix64 rng(kSeed);
    std::vector<KernelSpace> spaces;
    for (Index n : {2, 3, 4, 8}) {
      const auto np = static_cast<std::size_t>(n);
      spaces.push_back(build_orthonormal(n));
      spaces.push_back(build_szego(random_disc_points(rng, np, 0.9)));
      spaces.push_back(build_bergman(random_disc_points(rng, np, 0.9)));
      spaces.push_back(build_fock(random_disc_points(rng, np, 1.5)));
      spaces.push_back(build_from_gram(random_gram(rng, n, 2 * n)));
    }
    for (const KernelSpace& s : spaces) {
      const Operator a = -Operator::identity(s.dim());
      const BoundEvaluation t2 = evaluate_bound(BoundId::T2, a, s, nullptr);
      const BoundEvaluation pi = evaluate_bound(BoundId::T2FixedPi, a, s, nullptr);
      const double theta = t2.params.theta_star.value_or(-1.0);
      if (std::abs(t2.rhs - 2.0) > 1e-9) o.fail("B-T2 rhs " + format_double(t2.rhs));
      if (std::abs(std::remainder(theta, 2 * std::numbers::pi)) > 1e-6) o.fail("theta* " + format_double(theta));
      if (std::abs(pi.rhs - 6.0) > 1e-9) o.fail("B-T2-FIXED-PI rhs " + format_double(pi.rhs));
    }
    o.note << spaces.size() << " spaces";
  });
  report(1, "minus-identity theta bound", o, secs, 1.0);
}

void eqn1_campaign() {
  Outcome o;
  const double secs = timed([&] {
    const SuiteReport r = run_suite(campaign({BoundId::Eqn1}));
    const BoundStats* st = r.stats(BoundId::Eqn1);
    if (!r.ok() || !st || st->checked != kTrials) describe_violations(r, o);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    const BoundEvaluation ev = evaluate_bound(BoundId::Eqn1, Operator(m), build_orthonormal(2), nullptr);
    for (const BoundSide& s : ev.sides)
      if (s.slack != 0.0) o.fail("nilpotent slack " + format_double(s.slack) + " on " + s.label);
    if (ev.sides.size() != 2) o.fail("expected two sides");
    if (o.pass) o.note << st->checked << " instances, min slack " << format_double(st->min_slack.value_or(0));
  });
  report(2, "eta sandwich campaign", o, secs, 30.0);
}

void full_campaign() {
  Outcome o3;
  const double secs3 = timed([&] {
    const SuiteConfig cfg = campaign({all_bounds().begin(), all_bounds().end()});
    const SuiteReport r = run_suite(cfg);
    if (!r.ok()) describe_violations(r, o3);
    for (BoundId id : all_bounds()) {
      const BoundStats* st = r.stats(id);
      if (id == BoundId::RmkNormal) continue;
      if (!st || st->checked != kTrials) o3.fail(std::string(to_string(id)) + " not checked on every trial");
    }

    // separately constructed orthogonal pairs, verified before use
    SplitMix64 rng(kSeed + 1);
    int pairs = 0;
    for (int t = 0; t < 200; ++t) {
      const Index n = cfg.dims[rng.below(cfg.dims.size())];
      const KernelSpace s = build_szego(random_disc_points(rng, static_cast<std::size_t>(n), 0.9));
      const Operator a = random_operator(rng, s.dim(), std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
      const Operator b = orthogonal_partner(rng, a);
      if (!real_orthogonal_on_kernels(a, b, s)) {
        o3.fail("constructed pair not orthogonal at trial " + std::to_string(t));
        continue;
      }
      const BoundEvaluation ev = evaluate_bound(BoundId::SumOrth, a, s, &b);
      if (!ev.satisfied) o3.fail("B-SUM-ORTH violated on constructed pair " + std::to_string(t));
      ++pairs;
    }
    if (o3.pass)
      o3.note << r.total_checked() << " bound checks, B-SUM " << r.stats(BoundId::Sum)->checked << " pairs, "
              << "B-SUM-ORTH " << r.stats(BoundId::SumOrth)->checked << "+" << pairs << " pairs, B-RMK-NORMAL "
              << r.stats(BoundId::RmkNormal)->checked;
  });
  report(3, "all registry bounds", o3, secs3, 300.0);
}

// same instances as the full campaign
void dominance() {
  Outcome o5;
  const double secs5 = timed([&] {
    const SuiteConfig cfg = campaign({all_bounds().begin(), all_bounds().end()});
    int normals = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialInstance inst = draw_trial(cfg, t);
      const BoundEvaluator ev(inst.a, inst.space, std::nullopt, optimizer_config_for(cfg, inst.stream_seed));
      const double free_theta = ev.evaluate(BoundId::T2).rhs;
      const double at_pi = ev.evaluate(BoundId::T2FixedPi).rhs;
      if (free_theta > at_pi) o5.fail("B-T2 above theta=pi at trial " + std::to_string(t));
      if (is_normal(inst.a)) {
        ++normals;
        const Operator ata = adjoint(inst.a) * inst.a;
        const double ref = berezin_norm(ata + ata * ata, inst.space);
        const double rhs = ev.evaluate(BoundId::RmkNormal).rhs;
        if (rhs > ref + cfg.tol * std::max(1.0, ref)) o5.fail("B-RMK-NORMAL rhs above alpha=1/2 form at " + std::to_string(t));
      }
    }
    if (o5.pass) o5.note << cfg.trials << " instances, " << normals << " normal";
  });
  report(5, "dominance", o5, secs5, 300.0);
}

void inequality_suites() {
  Outcome o;
  const double secs = timed([&] {
    SplitMix64 rng(kSeed + 2);
    const double tol = 1e-9;
    long bad = 0;
    for (int t = 0; t < 1000; ++t) {
      const Index n = 2 + static_cast<Index>(rng.below(7));
      const Matrix g = random_complex_matrix(rng, n, n);
      const PsdSpectrum p(Operator(g.adjoint() * g));
      const Vector x = random_unit_vector(rng, n);
      for (double r : {1.0, 1.5, 2.0, 3.0}) bad += !jensen_power(p, x, r).holds(tol);
    }
    if (bad) o.fail("Jensen power violations " + std::to_string(bad));
    bad = 0;
    for (int t = 0; t < 1000; ++t) {
      const Index n = 2 + static_cast<Index>(rng.below(7));
      const Operator a = random_operator(rng, n, std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
      const Vector x = random_complex_vector(rng, n);
      const Vector y = random_complex_vector(rng, n);
      for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) bad += !mixed_schwarz(a, x, y, alpha).holds(tol);
    }
    if (bad) o.fail("mixed Schwarz violations " + std::to_string(bad));
    bad = 0;
    for (int t = 0; t < 1000; ++t) {
      const Index n = 2 + static_cast<Index>(rng.below(7));
      bad += !buzano(random_complex_vector(rng, n), random_complex_vector(rng, n), random_unit_vector(rng, n)).holds(tol);
    }
    if (bad) o.fail("Buzano violations " + std::to_string(bad));
    bad = 0;
    for (int t = 0; t < 1000; ++t) {
      const double a = rng.uniform(0.0, 10.0);
      const double b = rng.uniform(0.0, 10.0);
      const double alpha = rng.uniform();
      double r = rng.uniform(-3.0, 3.0);
      double s = rng.uniform(-3.0, 3.0);
      if (r > s) std::swap(r, s);
      const double mr = power_mean({a, b, alpha, r});
      const double ms = power_mean({a, b, alpha, s});
      bad += !within_tolerance(mr, ms, tol);
    }
    if (bad) o.fail("power mean violations " + std::to_string(bad));
    if (o.pass) o.note << "4 x 1000 instances";
  });
  report(4, "scalar inequality suites", o, secs, 10.0);
}

void witness_certification() {
  Outcome o;
  const double secs = timed([&] {
    SplitMix64 rng(kSeed + 3);
    double worst_low = 1e300;
    for (int t = 0; t < 200; ++t) {
      const Index dims[] = {2, 3, 4, 8};
      const Index n = dims[rng.below(4)];
      const Operator a = random_operator(rng, n, std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
      const double w = numerical_radius(a).value;
      const double nrm = operator_norm(a).value;
      const WitnessedEstimate d = dw_lower_estimate(a, nullptr, {.seed = static_cast<std::uint64_t>(t)});
      const double f = dw_functional(a, d.witness);
      if (std::abs(d.witness.norm() - 1.0) > 1e-12 || std::abs(f - d.value) > 1e-12 * std::max(1.0, f))
        o.fail("witness does not reproduce the value at " + std::to_string(t));
      const double low = std::max(w, nrm * nrm);
      const double high = std::sqrt(w * w + std::pow(nrm, 4));
      if (f < low - 1e-6 || f > high + 1e-6) o.fail("outside sandwich at " + std::to_string(t));
      worst_low = std::min(worst_low, f - low);
    }
    if (o.pass) o.note << "200 operators, min margin over lower bound " << format_double(worst_low);
  });
  report(6, "dw witness certification", o, secs, 60.0);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void determinism(const std::string& cli, const std::filesystem::path& dir) {
  Outcome o;
  const double secs = timed([&] {
    std::filesystem::create_directories(dir);
    const auto a = dir / "report_a.json";
    const auto b = dir / "report_b.json";
    const std::string args = " check --seed " + std::to_string(kSeed) + " --trials 50 --out ";
    const int ra = std::system(("\"" + cli + "\"" + args + "\"" + a.string() + "\" 2>/dev/null").c_str());
    const int rb = std::system(("\"" + cli + "\"" + args + "\"" + b.string() + "\" 2>/dev/null").c_str());
    if (ra == -1 || rb == -1 || !std::filesystem::exists(a) || !std::filesystem::exists(b)) {
      o.fail("could not run " + cli);
      return;
    }
    const std::string ja = slurp(a);
    const std::string jb = slurp(b);
    if (ja.empty() || ja != jb) o.fail("reports differ");
    else o.note << ja.size() << " identical bytes";
  });
  report(7, "deterministic reports", o, secs, 60.0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: " << argv[0] << " <berlab cli> <scratch dir>\n";
    return 2;
  }
  try {
    minus_identity();
    eqn1_campaign();
    full_campaign();
    inequality_suites();
    dominance();
    witness_certification();
    determinism(argv[1], argv[2]);
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%s\n", failures ? "acceptance FAILED" : "acceptance passed");
  return failures ? 1 : 0;
}
