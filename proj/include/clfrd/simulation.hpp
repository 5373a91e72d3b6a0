#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "clfrd/distributions.hpp"

namespace clfrd {

enum class StartPolicy {
  /// Each replication's local search starts at the generating parameters.
  TrueStart,
  /// Each replication uses the deterministic multi-start grid of fit_clfrd.
  MultiStart,
};

/// The eight (alpha, beta, lambda) combinations of the recovery study:
/// every choice of 2.0 / 0.5 per coordinate, alpha varying slowest.
std::vector<ClfrdParams> default_parameter_sets();

struct StudyConfig {
  std::vector<ClfrdParams> parameter_sets = default_parameter_sets();
  /// 1-based labels for parameter_sets; defaults to 1..size when empty.
  std::vector<int> set_ids;
  std::vector<int> sample_sizes{100, 200, 300};
  int replications = 500;
  std::uint64_t base_seed = 20240607;
  double ci_level = 0.95;
  StartPolicy start = StartPolicy::TrueStart;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct ParamSummary {
  std::string name;
  double true_value = 0.0;
  double mean = 0.0;
  double bias = 0.0;
  double sd = 0.0;
  double mse = 0.0;
  double low = 0.0;
  double up = 0.0;
  double ciw = 0.0;
};

struct SimulationSummary {
  int set_id = 0;
  ClfrdParams params{1.0, 1.0, 1.0};
  int n = 0;
  int replications = 0;
  /// Replications whose fit threw, returned non-finite estimates, or diverged
  /// (a parameter ran off to infinity).
  int failures = 0;
  /// Successful replications whose optimum sits on the parameter boundary
  /// (lambda -> 0 or beta -> 0); they are included in the summaries.
  int boundary_fits = 0;
  /// More than 20% of the fits failed.
  bool degenerate = false;
  std::array<ParamSummary, 3> stats;
};

struct CellOptions {
  double ci_level = 0.95;
  StartPolicy start = StartPolicy::TrueStart;
  unsigned threads = 0;
};

/// Replication r draws n variates from stream (seed, r) by inverse transform
/// and fits CLFRD. Summaries cover successful fits only.
SimulationSummary run_cell(const ClfrdParams& p, int n, int reps, std::uint64_t seed,
                           const CellOptions& opts = {});

/// Seed of cell (set_id, n), derived from the study's base seed.
std::uint64_t cell_seed(std::uint64_t base_seed, int set_id, int n);

/// Every parameter set crossed with every sample size, sets outermost.
std::vector<SimulationSummary> run_study(const StudyConfig& cfg);

/// One row per (set, n, parameter); columns set_id, alpha, beta, lambda, n,
/// param, mle, bias, sd, mse, low, up, ciw, failures.
void write_study_csv(std::ostream& out, const std::vector<SimulationSummary>& rows);
/// Same rows as a JSON array of objects with the CSV column names as keys.
std::string study_json(const std::vector<SimulationSummary>& rows, int indent = 2);

}  // namespace clfrd
