#include "xyquench/pipeline.hpp"

#include "xyquench/errors.hpp"

namespace xyq {

PairObservables observe_pair(std::span<const Mode> modes, const ChainConfig& config, int offset,
                             TimePoint when) {
  if (offset < 1) throw InvalidInput("pair offset must be >= 1");
  const ContractionTable table(modes, config, when, offset + 1);

  PairObservables out;
  out.mz = magnetization_z(modes, config, when);
  out.sx = correlator_xx(table, offset);
  out.sy = correlator_yy(table, offset);
  out.sz = correlator_zz(table, offset);
  const TwoSiteState state = two_site_state(out.mz, out.sx, out.sy, out.sz);
  out.clamped_entries = state.clamped_entries;
  out.concurrence = concurrence_x(state);
  out.eof = entanglement_of_formation(out.concurrence);
  return out;
}

PairObservables observe_pair(const ChainConfig& config, int offset, TimePoint when) {
  return observe_pair(mode_grid(config), config, offset, when);
}

PairObservables window_average(const ChainConfig& config, int offset, double window_start,
                               int samples) {
  if (!(window_start > 0.0)) throw InvalidInput("averaging window must start at t > 0");
  if (samples < 2) throw InvalidInput("averaging window needs at least two samples");
  const auto modes = mode_grid(config);
  PairObservables acc;
  for (int k = 0; k < samples; ++k) {
    const double t = window_start * (1.0 + static_cast<double>(k) / (samples - 1));
    const PairObservables o = observe_pair(modes, config, offset, TimePoint::at(t));
    acc.mz += o.mz;
    acc.sx += o.sx;
    acc.sy += o.sy;
    acc.sz += o.sz;
    acc.concurrence += o.concurrence;
    acc.eof += o.eof;
    acc.clamped_entries += o.clamped_entries;
  }
  const double inv = 1.0 / samples;
  acc.mz *= inv;
  acc.sx *= inv;
  acc.sy *= inv;
  acc.sz *= inv;
  acc.concurrence *= inv;
  acc.eof *= inv;
  return acc;
}

}  // namespace xyq
