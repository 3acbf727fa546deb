#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berlab/bounds.hpp"
#include "berlab/generators.hpp"
#include "berlab/io.hpp"

namespace berlab {

enum class SpaceKind { Orthonormal, Szego, Bergman, Fock, RandomGram };

std::string_view to_string(SpaceKind kind);
/// Throws InvalidConfig.
SpaceKind parse_space_kind(std::string_view text);

struct SuiteConfig {
  std::uint64_t seed = 0;
  int trials = 500;
  std::vector<Index> dims{2, 3, 4, 8};
  std::vector<Index> omega_sizes{2, 4, 8, 16};
  std::vector<SpaceKind> kernel_kinds{SpaceKind::Orthonormal, SpaceKind::Szego, SpaceKind::Bergman,
                                      SpaceKind::Fock, SpaceKind::RandomGram};
  std::vector<BoundId> bounds{all_bounds().begin(), all_bounds().end()};
  double tol = 1e-9;
  int dw_restarts = 4;

  /// Throws InvalidConfig.
  void validate() const;
};

/// One randomized (A, S, B) draw of a campaign.
///
/// Orthonormal spaces use the drawn dimension n as the point count. Disc and
/// Fock spaces use n distinct random points, so their dimension is the
/// numerical rank (n unless points nearly coincide). Random Gram spaces use
/// max(n, m) random vectors in C^n. All draws happen regardless of the bound
/// selection so a trial is identical under any filter.
struct TrialInstance {
  int trial = 0;
  std::uint64_t stream_seed = 0;
  SpaceKind space_kind = SpaceKind::Orthonormal;
  OperatorKind operator_kind = OperatorKind::Gaussian;
  double scale = 1.0;
  KernelSpace space;
  Operator a;
  Operator sum_partner;
  Operator orthogonal_partner;
};

TrialInstance draw_trial(const SuiteConfig& cfg, int trial);

struct SlackWitness {
  int trial = 0;
  std::uint64_t stream_seed = 0;
  BoundParams params;
};

struct BoundStats {
  BoundId id = BoundId::Eqn1;
  long checked = 0;
  long violations = 0;
  long errors = 0;
  double worst_violation = 0.0;
  std::optional<double> min_slack;
  std::optional<SlackWitness> min_slack_instance;
};

struct FailureRecord {
  int trial = 0;
  std::uint64_t stream_seed = 0;
  BoundId id = BoundId::Eqn1;
  std::optional<BoundEvaluation> evaluation;
  std::string error;
  Json provenance;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<BoundStats> bounds;  // registry order
  std::vector<FailureRecord> failures;

  long total_checked() const;
  long total_violations() const;
  long total_errors() const;
  bool ok() const { return total_violations() == 0 && total_errors() == 0; }
  const BoundStats* stats(BoundId id) const;
};

SuiteReport run_suite(const SuiteConfig& cfg);
Json config_to_json(const SuiteConfig& cfg);
Json report_to_json(const SuiteReport& report);

OptimizerConfig optimizer_config_for(const SuiteConfig& cfg, std::uint64_t stream_seed);

struct FixtureCheck {
  std::string quantity;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct FixtureReport {
  std::string name;
  std::vector<BoundEvaluation> evaluations;
  std::vector<FixtureCheck> checks;

  bool passed() const;
};

std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
FixtureReport replay_fixture(std::string_view name);
Json fixture_to_json(const FixtureReport& report);

}  // namespace berlab
