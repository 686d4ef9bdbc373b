#ifndef OPUC_EXPERIMENTS_HPP
#define OPUC_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opuc/sequences.hpp"

namespace opuc {

enum class ReportFormat { Csv, Json };

struct ExperimentConfig {
  FamilySpec family;
  std::vector<SingularityPoint> profile;
  std::vector<std::size_t> n_values;  // strictly increasing
  double atol = 1e-9;
  std::string output_path;
  ReportFormat format = ReportFormat::Csv;
  std::optional<std::string> alpha_file;  // overrides family when set

  void validate() const;  // throws std::invalid_argument
};

struct ConvergenceRow {
  std::size_t n = 0;
  double entropy_value = 0.0;  // profile-weighted entropy of log w^{(n)}
  double szego_value = 0.0;    // unweighted entropy of log w^{(n)}
  double rhs_partial = 0.0;    // coefficient-side partial sum
  double quad_error = 0.0;
  bool failed = false;         // per-row quadrature failure marker
};

struct IdentitySummary {
  std::string name;
  double max_residual = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;  // quadrature failures, recorded and skipped
};

struct IdentitiesReport {
  std::vector<IdentitySummary> identities;
  bool all_within(double tol) const;
};

// Runs the algebraic identities (antipodal, both order-2 forms), the
// quadrature cross-checks (two-point I1, ledger invariance), and the
// inequality suite on seeded random inputs. Quadrature-backed checks run on
// a subsample of at most 25 trials; algebraic checks run on every trial.
IdentitiesReport run_identities(std::size_t trials, std::uint64_t seed, double tol);

// One convergence row per n: weighted entropy, unweighted Szego entropy, and
// coefficient-side partial sum for the configured family and profile.
std::vector<ConvergenceRow> run_theorem_trend(const ExperimentConfig& config);

// Same table shape for profiles with total multiplicity >= 3; exploratory.
std::vector<ConvergenceRow> run_conjecture_probe(const ExperimentConfig& config);

// CSV header: n,entropy_value,szego_value,rhs_partial,quad_error.
// Numbers print with 17 significant digits (round-trip exact).
void emit_report(const std::vector<ConvergenceRow>& table, ReportFormat format,
                 const std::string& path);
void write_report(const std::vector<ConvergenceRow>& table, ReportFormat format,
                  std::ostream& out);

// JSON config file mirroring ExperimentConfig; JSON alpha file of [re, im] pairs.
ExperimentConfig load_config(const std::string& path);
VerblunskySequence load_alpha_file(const std::string& path);

// "theta:mult,theta:mult" with radians as decimal literals.
std::vector<SingularityPoint> parse_profile(const std::string& text);

}  // namespace opuc

#endif
