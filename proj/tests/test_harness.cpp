#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "berlab/generators.hpp"
#include "berlab/harness.hpp"
#include "berlab/io.hpp"

namespace berlab {
namespace {

TEST(Rng, SplitMixReferenceValues) {
  // first outputs for seed 0 of the reference SplitMix64
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng(), 0x06C45D188009454FULL);
}

TEST(Rng, UniformAndBelowStayInRange) {
  SplitMix64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rng.below(7), 7u);
  }
}

TEST(Generators, Deterministic) {
  SplitMix64 r1(123);
  SplitMix64 r2(123);
  const Operator a = random_operator(r1, 2, 1.0);
  const Operator b = random_operator(r2, 2, 1.0);
  EXPECT_EQ(a.matrix(), b.matrix());
}

TEST(Generators, StructuredKinds) {
  SplitMix64 rng(124);
  for (int t = 0; t < 20; ++t) {
    const Operator h = random_operator(rng, 4, 2.0, OperatorKind::Hermitian);
    EXPECT_LE((h.matrix() - h.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    const Operator n = random_operator(rng, 4, 2.0, OperatorKind::Normal);
    const Matrix comm = n.matrix().adjoint() * n.matrix() - n.matrix() * n.matrix().adjoint();
    EXPECT_LE(operator_norm(Operator(comm)).value, 1e-12 * std::max(1.0, std::pow(operator_norm(n).value, 2)));
    const Operator u = random_operator(rng, 4, 1.0, OperatorKind::Unitary);
    EXPECT_LT((u.matrix().adjoint() * u.matrix() - Matrix::Identity(4, 4)).norm(), 1e-12);
    const Operator s = random_operator(rng, 4, 3.0, OperatorKind::NilpotentShift);
    EXPECT_EQ((s * s * s * s).matrix().norm(), 0.0);
  }
}

TEST(Generators, OrthogonalPartnerIsRealOrthogonal) {
  SplitMix64 rng(125);
  for (int t = 0; t < 20; ++t) {
    const Operator a = random_operator(rng, 3, 2.0);
    const Operator b = orthogonal_partner(rng, a);
    for (int k = 0; k < 5; ++k) {
      const Vector x = random_unit_vector(rng, 3);
      EXPECT_LT(std::abs(inner(a * x, b * x).real()), 1e-10 * std::max(1.0, (a * x).norm() * (b * x).norm()));
    }
  }
}

TEST(RunSuite, SingleInstance) {
  SuiteConfig cfg;
  cfg.trials = 1;
  cfg.bounds = {BoundId::Eqn1};
  cfg.dims = {2};
  cfg.kernel_kinds = {SpaceKind::Orthonormal};
  const SuiteReport r = run_suite(cfg);
  ASSERT_NE(r.stats(BoundId::Eqn1), nullptr);
  EXPECT_EQ(r.stats(BoundId::Eqn1)->checked, 1);
  EXPECT_EQ(r.stats(BoundId::Eqn1)->violations, 0);
  EXPECT_TRUE(r.ok());
}

TEST(RunSuite, InvalidConfig) {
  SuiteConfig cfg;
  cfg.trials = 0;
  try {
    run_suite(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
  }
  cfg.trials = 1;
  cfg.dims = {};
  EXPECT_THROW(run_suite(cfg), Error);
  EXPECT_THROW(parse_space_kind("hardy"), Error);
}

TEST(RunSuite, RepeatableReport) {
  SuiteConfig cfg;
  cfg.seed = 3;
  cfg.trials = 6;
  const std::string first = report_to_json(run_suite(cfg)).dump(2);
  const std::string second = report_to_json(run_suite(cfg)).dump(2);
  EXPECT_EQ(first, second);
  const Json j = Json::parse(first);
  for (const char* key : {"format", "rng", "config", "summary", "bounds", "failures"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(RunSuite, FilterDoesNotChangeDraws) {
  SuiteConfig cfg;
  cfg.seed = 9;
  const TrialInstance all = draw_trial(cfg, 4);
  cfg.bounds = {BoundId::T2};
  const TrialInstance some = draw_trial(cfg, 4);
  EXPECT_EQ(all.a.matrix(), some.a.matrix());
  EXPECT_EQ(all.sum_partner.matrix(), some.sum_partner.matrix());
  EXPECT_EQ(all.stream_seed, derive_stream_seed(9, 4));
}

TEST(Fixtures, AllPass) {
  for (const std::string& name : fixture_names()) {
    const FixtureReport r = replay_fixture(name);
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_FALSE(r.checks.empty());
  }
  const FixtureReport mi = replay_fixture("minus-identity");
  bool saw2 = false;
  bool saw6 = false;
  for (const BoundEvaluation& ev : mi.evaluations) {
    if (ev.id == BoundId::T2) saw2 = std::abs(ev.rhs - 2.0) <= 1e-9;
    if (ev.id == BoundId::T2FixedPi) saw6 = std::abs(ev.rhs - 6.0) <= 1e-9;
  }
  EXPECT_TRUE(saw2);
  EXPECT_TRUE(saw6);
  try {
    replay_fixture("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFixture);
  }
}

TEST(Io, SpaceAndOperatorRoundTrip) {
  const Json js = Json::parse(R"({"kind": "szego", "points": [[0, 0], [0.5, 0.1]]})");
  const KernelSpace s = space_from_json(js);
  EXPECT_EQ(s.size(), 2);
  const KernelSpace again = space_from_json(space_to_json(s));
  EXPECT_LT((again.induced_gram() - s.induced_gram()).norm(), 1e-12);

  const Json jg = Json::parse(R"({"kind": "gram", "gram": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
  EXPECT_EQ(space_from_json(jg).dim(), 2);

  SplitMix64 rng(7);
  const Operator a = random_operator(rng, 3, 1.0);
  EXPECT_EQ(operator_from_json(operator_to_json(a)).matrix(), a.matrix());
  EXPECT_THROW(operator_from_json(Json::parse(R"({"dim": 2, "entries": [[[1,0]]]})")), Error);
  EXPECT_THROW(space_from_json(Json::parse(R"({"kind": "hardy", "points": []})")), Error);
}

TEST(Io, ShellCsv) {
  const Complex pts[] = {0.0, 0.5};
  std::ostringstream out;
  write_shell_csv(out, dwber_shell(-Operator::identity(2), build_szego(pts)));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "label_re,label_im,symbol_re,symbol_im,image_norm_sq");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 2);
}

TEST(Io, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 2.0, -1e-300, 6.02214076e23}) EXPECT_EQ(std::stod(format_double(x)), x);
}

}  // namespace
}  // namespace berlab
