// Experiment runner for the sum-rule library.
//
//   opuc identities --trials N --seed S --tol T
//   opuc trend --config cfg.json [--out table.csv]
//   opuc probe --config cfg.json [--out table.csv]
//
// Exit codes: 0 success, 1 tolerance failure, 2 configuration error,
// 3 numeric failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "opuc/experiments.hpp"
#include "opuc/quadrature.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

int run_identities_cmd(std::size_t trials, std::uint64_t seed, double tol) {
  const opuc::IdentitiesReport report = opuc::run_identities(trials, seed, tol);
  std::size_t failures = 0;
  for (const auto& s : report.identities) {
    std::printf("%-28s cases=%-7zu max_residual=%.3e%s\n", s.name.c_str(), s.cases,
                s.max_residual, s.failures ? "  (quadrature failures recorded)" : "");
    failures += s.failures;
  }
  if (!report.all_within(tol)) {
    std::printf("FAIL: at least one identity residual >= tol %.3e\n", tol);
    return kExitTolerance;
  }
  std::printf("OK: all identity residuals < %.3e (%zu quadrature failures)\n", tol, failures);
  return kExitOk;
}

int run_table_cmd(const std::string& config_path, const std::optional<std::string>& out_override,
                  bool probe) {
  opuc::ExperimentConfig config = opuc::load_config(config_path);
  if (out_override) config.output_path = *out_override;
  const auto table = probe ? opuc::run_conjecture_probe(config) : opuc::run_theorem_trend(config);
  if (config.output_path.empty()) {
    opuc::write_report(table, config.format, std::cout);
  } else {
    opuc::emit_report(table, config.format, config.output_path);
  }
  for (const auto& row : table)
    if (row.failed) return kExitNumeric;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order sum rules for orthogonal polynomials on the unit circle"};
  app.require_subcommand(1);

  std::size_t trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-12;
  auto* identities = app.add_subcommand("identities", "Run the identity and inequality suites");
  identities->add_option("--trials", trials, "Number of random trials");
  identities->add_option("--seed", seed, "Master RNG seed");
  identities->add_option("--tol", tol, "Residual tolerance");

  std::string config_path;
  std::optional<std::string> out_path;
  auto* trend = app.add_subcommand("trend", "Convergence table for the theorem dichotomies");
  trend->add_option("--config", config_path, "JSON experiment config")->required();
  trend->add_option("--out", out_path, "Output path (overrides config)");

  std::string probe_config;
  std::optional<std::string> probe_out;
  auto* probe = app.add_subcommand("probe", "Exploratory table for profiles of multiplicity >= 3");
  probe->add_option("--config", probe_config, "JSON experiment config")->required();
  probe->add_option("--out", probe_out, "Output path (overrides config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (identities->parsed()) return run_identities_cmd(trials, seed, tol);
    if (trend->parsed()) return run_table_cmd(config_path, out_path, false);
    return run_table_cmd(probe_config, probe_out, true);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const opuc::QuadratureError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}
