#pragma once

#include <span>

#include "xyquench/correlations.hpp"
#include "xyquench/entanglement.hpp"

namespace xyq {

/// Everything the chain pipeline reports for one site pair (l, l + offset).
struct PairObservables {
  double mz = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  int clamped_entries = 0;
};

PairObservables observe_pair(std::span<const Mode> modes, const ChainConfig& config, int offset,
                             TimePoint when);
PairObservables observe_pair(const ChainConfig& config, int offset, TimePoint when);

/// Arithmetic mean of each observable over `samples` equally spaced times
/// covering [window_start, 2 * window_start] inclusive.
PairObservables window_average(const ChainConfig& config, int offset, double window_start,
                               int samples = 200);

}  // namespace xyq
