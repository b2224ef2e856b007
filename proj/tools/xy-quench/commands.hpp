#pragma once

#include <string>
#include <vector>

#include "dataset.hpp"
#include "run_spec.hpp"

namespace xyq::cli {

/// Largest |C(N) - C(2N)| tolerated before the tool suggests a larger ring.
inline constexpr double kConvergenceTolerance = 1e-4;
inline constexpr int kConvergenceSamples = 5;

Dataset run_timeseries(const RunSpec& spec);
Dataset run_surface(const RunSpec& spec);
Dataset run_equilibrium(const RunSpec& spec);

struct OracleReport {
  Dataset data;
  /// Max over the time grid of |C_pipeline - C_oracle|, one per oracle size (ascending N).
  std::vector<int> sizes;
  std::vector<double> max_error_c;
  bool schedule_holds = false;
};
OracleReport run_oracle_compare(const RunSpec& spec);

/// Re-evaluates C at 2N on evenly spread samples of the run's grid and returns
/// one message per sample that moved by more than kConvergenceTolerance.
std::vector<std::string> convergence_warnings(const RunSpec& spec);

struct RunResult {
  Dataset data;
  std::vector<std::string> diagnostics;  // written to stderr
  int exit_code = 0;
};
RunResult run(const RunSpec& spec);

}  // namespace xyq::cli
