// berlab: command-line front end for the Berezin radius inequality harness.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berlab/harness.hpp"

namespace {

using namespace berlab;

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

int run_check(const SuiteConfig& cfg, const std::string& out) {
  const SuiteReport report = run_suite(cfg);
  write_json(report_to_json(report), out);
  for (const BoundStats& s : report.bounds) {
    std::cerr << to_string(s.id) << ": checked " << s.checked << ", violations " << s.violations;
    if (s.errors) std::cerr << ", errors " << s.errors;
    if (s.min_slack) std::cerr << ", min slack " << format_double(*s.min_slack);
    std::cerr << '\n';
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Davis-Wielandt-Berezin radius bounds on finite kernel spaces"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::vector<std::string> kernel_names;
  std::vector<std::string> bound_names;
  std::string out;
  auto* check = app.add_subcommand("check", "run a randomized verification campaign");
  check->add_option("--seed", cfg.seed, "campaign seed");
  check->add_option("--trials", cfg.trials, "number of random instances");
  check->add_option("--dims", cfg.dims, "operator dimensions")->delimiter(',');
  check->add_option("--omega", cfg.omega_sizes, "point counts for random Gram spaces")->delimiter(',');
  check->add_option("--kernels", kernel_names,
                    "subset of orthonormal,szego,bergman,fock,random_gram")
      ->delimiter(',');
  check->add_option("--bounds", bound_names, "bound ids, e.g. B-T2,B-T6 (default: all)")->delimiter(',');
  check->add_option("--tol", cfg.tol, "relative tolerance");
  check->add_option("--restarts", cfg.dw_restarts, "random restarts of the dw ascent");
  check->add_option("--out", out, "report path (default: stdout)");

  std::string space_path;
  std::string op_path;
  std::string op2_path;
  std::string shell_out;
  auto* shell = app.add_subcommand("shell", "export the Davis-Wielandt-Berezin shell as CSV");
  shell->add_option("--space", space_path, "kernel spec JSON")->required();
  shell->add_option("--op", op_path, "operator JSON")->required();
  shell->add_option("--out", shell_out, "CSV path (default: stdout)");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "replay worked examples");
  fixtures->add_option("--name", fixture_name, "fixture to replay (default: all)");

  std::string bound_name;
  double eval_tol = 1e-9;
  auto* eval = app.add_subcommand("eval", "evaluate one bound on a given operator and space");
  eval->add_option("--bound", bound_name, "bound id")->required();
  eval->add_option("--space", space_path, "kernel spec JSON")->required();
  eval->add_option("--op", op_path, "operator JSON")->required();
  eval->add_option("--op2", op2_path, "second operator JSON (B-SUM, B-SUM-ORTH)");
  eval->add_option("--tol", eval_tol, "relative tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      if (!kernel_names.empty()) {
        cfg.kernel_kinds.clear();
        for (const auto& k : kernel_names) cfg.kernel_kinds.push_back(parse_space_kind(k));
      }
      if (!bound_names.empty()) {
        cfg.bounds.clear();
        for (const auto& b : bound_names) cfg.bounds.push_back(parse_bound_id(b));
      }
      return run_check(cfg, out);
    }
    if (*shell) {
      const KernelSpace space = space_from_json(read_json_file(space_path));
      const Operator a = operator_from_json(read_json_file(op_path));
      const auto points = dwber_shell(a, space);
      if (shell_out.empty() || shell_out == "-") {
        write_shell_csv(std::cout, points);
      } else {
        std::ofstream f(shell_out);
        if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + shell_out);
        write_shell_csv(f, points);
      }
      return 0;
    }
    if (*fixtures) {
      std::vector<std::string> names = fixture_name.empty() ? fixture_names() : std::vector{fixture_name};
      Json all = Json::array();
      bool ok = true;
      for (const auto& name : names) {
        const FixtureReport r = replay_fixture(name);
        ok = ok && r.passed();
        all.push_back(fixture_to_json(r));
      }
      std::cout << all.dump(2) << '\n';
      return ok ? 0 : 1;
    }
    if (*eval) {
      const BoundId id = parse_bound_id(bound_name);
      const KernelSpace space = space_from_json(read_json_file(space_path));
      const Operator a = operator_from_json(read_json_file(op_path));
      std::optional<Operator> b;
      if (!op2_path.empty()) b = operator_from_json(read_json_file(op2_path));
      OptimizerConfig opt;
      opt.tol = eval_tol;
      const BoundEvaluation ev = evaluate_bound(id, a, space, b ? &*b : nullptr, opt);
      std::cout << evaluation_to_json(ev).dump(2) << '\n';
      return ev.satisfied ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "berlab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "berlab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
