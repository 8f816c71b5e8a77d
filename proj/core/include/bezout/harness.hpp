#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bezout/polynomial.hpp"

namespace bezout {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNonConvergence = 3,
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;  // overrides of default_tolerances()
  int ensemble_size = 500;
  int min_degree = 1;
  int max_degree = 5;
  double delta_floor = 0.05;
  std::int64_t separation_samples = 10000;
  std::filesystem::path out_dir = "out";
  bool json = false;
  bool timing = false;  // per-record wall time; off keeps reports byte-identical
  int threads = 0;      // 0: hardware concurrency

  static const std::map<std::string, double>& default_tolerances();
  double tol(const std::string& name) const;
  /// Throws InvalidArgument for unknown or nonpositive tolerances and bad ranges.
  void validate() const;
};

/// Coefficients uniform in the closed unit disk, nonzero leading coefficient.
Polynomial random_polynomial(std::mt19937_64& rng, int degree);
/// Instance `index` of the seeded ensemble: its own generator, degrees uniform in range.
std::pair<Polynomial, Polynomial> ensemble_pair(std::uint64_t seed, std::uint64_t index, int min_degree,
                                                int max_degree);

struct CertRecord {
  int index = 0;
  int N = 0;
  int K = 0;
  double delta = 0.0;
  double delta_tilde_lower = 0.0;
  double delta_tilde_upper = 0.0;
  bool sandwich_ok = false;
  double norm_R = 0.0;
  double norm_S = 0.0;
  double ratio_R = 0.0;
  double ratio_S = 0.0;
  double crude_ratio_R = 0.0;
  double crude_ratio_S = 0.0;
  std::optional<double> ceiling;
  bool bound_ok = false;
  double inverse_ratio = 0.0;
  double resultant_spread = 0.0;
  bool resultant_ok = false;
  std::int64_t separation_samples = 0;
  std::int64_t separation_joint_hits = 0;
  bool simple_roots = false;
  std::map<std::string, double> residuals;  // backend tag -> residual
  std::optional<double> agreement;          // max coefficient gap across backends
  std::vector<std::string> backends;
  std::vector<std::string> notes;
  std::optional<double> wall_ms;
};

struct CertReport {
  std::uint64_t seed = 0;
  int requested = 0;
  int rejected = 0;
  std::vector<CertRecord> records;
  std::vector<std::string> warnings;

  // Aggregates; all recomputable from records.
  int residual_failures = 0;
  int disagreements = 0;
  int resultant_failures = 0;
  int separation_violations = 0;
  int sandwich_failures = 0;
  int bound_failures = 0;
  int backend_errors = 0;
  double max_ratio = 0.0;
  double max_inverse_ratio = 0.0;
  double empirical_T = 0.0;  // largest delta seen; no proven value exists

  bool ok() const noexcept;
  void recompute_aggregates(const RunConfig& config);
};

nlohmann::json to_json(const CertRecord& r);
nlohmann::json to_json(const CertReport& r);

/// Random-ensemble certification over every backend; deterministic in config.seed.
CertReport cmd_certify(const RunConfig& config);
void print_summary(const CertReport& report, std::ostream& out);

/// The three worked examples; prints a table (or JSON) and returns an exit code.
int cmd_examples(std::ostream& out, bool json);

/// Rebuild the figure instances, write SVGs and counts.json into out_dir.
int cmd_figures(const std::filesystem::path& out_dir, std::ostream& out, bool json);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

}  // namespace bezout
