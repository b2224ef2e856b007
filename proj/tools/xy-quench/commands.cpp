#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "worker_pool.hpp"
#include "xyquench/ed_oracle.hpp"
#include "xyquench/errors.hpp"
#include "xyquench/pipeline.hpp"

namespace xyq::cli {

namespace {

using Row = std::vector<Cell>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<Cell> pair_cells(Cell first, const PairObservables& o) {
  return {std::move(first), o.mz, o.sx, o.sy, o.sz, o.concurrence, o.eof};
}

struct Evaluated {
  Row row;
  std::string failure;
};

// Runs `fill` for one grid point; a NumericalFailure turns the computed cells
// into NaN and records the point instead of aborting the whole grid.
template <typename Fill>
Evaluated guarded(Row keys, std::size_t computed, const std::string& where, Fill fill) {
  try {
    return {fill(), {}};
  } catch (const NumericalFailure& e) {
    keys.resize(keys.size() + computed, kNaN);
    return {std::move(keys), where + ": " + e.what()};
  }
}

void collect(Dataset& out, std::vector<Evaluated> evaluated) {
  for (auto& e : evaluated) {
    out.rows.push_back(std::move(e.row));
    if (!e.failure.empty()) out.failures.push_back(std::move(e.failure));
  }
}

ChainConfig with_fields(ChainConfig c, double a, double b) {
  c.field_before = a;
  c.field_after = b;
  return c;
}

// Evenly spread indices into [0, count).
std::vector<std::size_t> sample_indices(std::size_t count, int samples) {
  std::vector<std::size_t> out;
  for (int k = 0; k < samples; ++k) {
    const auto i = static_cast<std::size_t>(
        std::llround(static_cast<double>(k) * static_cast<double>(count - 1) / (samples - 1)));
    if (out.empty() || out.back() != i) out.push_back(i);
  }
  return out;
}

struct SurfacePoint {
  double a;
  double b;
};

std::vector<SurfacePoint> surface_points(const RunSpec& spec) {
  const auto grid = spec.field_grid();
  std::vector<SurfacePoint> pts;
  pts.reserve(grid.size() * grid.size());
  for (double a : grid)
    for (double b : grid) pts.push_back({a, b});
  return pts;
}

}  // namespace

Dataset run_timeseries(const RunSpec& spec) {
  const auto modes = mode_grid(spec.chain);
  const auto times = spec.time_grid();
  Dataset out;
  out.columns = {"t", "M_z", "S^x", "S^y", "S^z", "C(d)", "EoF(d)"};
  const std::size_t extra = spec.time_average ? 2 : 1;
  collect(out, run_indexed<Evaluated>(times.size() + extra, spec.workers, [&](std::size_t i) {
    if (i < times.size()) {
      return guarded({times[i]}, 6, "t=" + format_double(times[i]), [&] {
        return pair_cells(times[i],
                          observe_pair(modes, spec.chain, spec.offset, TimePoint::at(times[i])));
      });
    }
    if (i == times.size()) {
      return guarded({std::string("inf")}, 6, "t=inf", [&] {
        return pair_cells(std::string("inf"),
                          observe_pair(modes, spec.chain, spec.offset, TimePoint::asymptotic()));
      });
    }
    const double T = *spec.time_average;
    const std::string label = "mean:" + format_double(T) + ":" + format_double(2.0 * T);
    return guarded({label}, 6, label, [&] {
      return pair_cells(label, window_average(spec.chain, spec.offset, T));
    });
  }));
  return out;
}

Dataset run_surface(const RunSpec& spec) {
  const auto modes = mode_grid(spec.chain);
  const auto pts = surface_points(spec);
  Dataset out;
  out.columns = {"a", "b", "C_asymptotic(d)", "EoF"};
  if (spec.time_average) out.columns.push_back("C_window(d)");
  collect(out, run_indexed<Evaluated>(pts.size(), spec.workers, [&](std::size_t i) {
    const ChainConfig c = with_fields(spec.chain, pts[i].a, pts[i].b);
    const std::string where = "a=" + format_double(pts[i].a) + " b=" + format_double(pts[i].b);
    return guarded({pts[i].a, pts[i].b}, out.columns.size() - 2, where, [&] {
      const PairObservables o = observe_pair(modes, c, spec.offset, TimePoint::asymptotic());
      Row row{pts[i].a, pts[i].b, o.concurrence, o.eof};
      if (spec.time_average)
        row.emplace_back(window_average(c, spec.offset, *spec.time_average).concurrence);
      return row;
    });
  }));
  return out;
}

Dataset run_equilibrium(const RunSpec& spec) {
  const auto modes = mode_grid(spec.chain);
  const auto fields = spec.field_grid();
  Dataset out;
  out.columns = {"h", "M_z", "S^x", "S^y", "S^z", "C(d)", "EoF(d)"};
  collect(out, run_indexed<Evaluated>(fields.size(), spec.workers, [&](std::size_t i) {
    const ChainConfig c = with_fields(spec.chain, fields[i], fields[i]);
    return guarded({fields[i]}, 6, "h=" + format_double(fields[i]), [&] {
      return pair_cells(fields[i], observe_pair(modes, c, spec.offset, TimePoint::at(0.0)));
    });
  }));
  return out;
}

OracleReport run_oracle_compare(const RunSpec& spec) {
  const auto times = spec.time_grid();
  const auto modes = mode_grid(spec.chain);
  const auto pipeline = run_indexed<PairObservables>(times.size(), spec.workers, [&](std::size_t i) {
    return observe_pair(modes, spec.chain, spec.offset, TimePoint::at(times[i]));
  });

  OracleReport report;
  report.sizes = spec.oracle_sizes;
  std::sort(report.sizes.begin(), report.sizes.end());
  report.data.columns = {"N",     "t",        "M_z",  "M_z_ed", "S^x",    "S^x_ed",
                         "S^y",   "S^y_ed",   "S^z",  "S^z_ed", "C(d)",   "C(d)_ed"};
  report.data.summary = nlohmann::ordered_json::array();

  const ChainConfig& c = spec.chain;
  for (int n : report.sizes) {
    const QuenchEvolution evo(thermal_state(build_hamiltonian(n, c.gamma, c.field_before), c.kT),
                              build_hamiltonian(n, c.gamma, c.field_after));
    const auto oracle = run_indexed<OraclePair>(times.size(), spec.workers, [&](std::size_t i) {
      return oracle_pair_observables(reduce_pair(evo.at(times[i]), 0, spec.offset));
    });

    double err_mz = 0.0, err_sx = 0.0, err_sy = 0.0, err_sz = 0.0, err_c = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const PairObservables& p = pipeline[i];
      const OraclePair& o = oracle[i];
      report.data.rows.push_back(Row{static_cast<long long>(n), times[i], p.mz, o.mz, p.sx, o.sx,
                                     p.sy, o.sy, p.sz, o.sz, p.concurrence, o.concurrence});
      err_mz = std::max(err_mz, std::abs(p.mz - o.mz));
      err_sx = std::max(err_sx, std::abs(p.sx - o.sx));
      err_sy = std::max(err_sy, std::abs(p.sy - o.sy));
      err_sz = std::max(err_sz, std::abs(p.sz - o.sz));
      err_c = std::max(err_c, std::abs(p.concurrence - o.concurrence));
    }
    report.max_error_c.push_back(err_c);
    report.data.summary.push_back({{"N", n},
                                   {"max_error_M_z", err_mz},
                                   {"max_error_S^x", err_sx},
                                   {"max_error_S^y", err_sy},
                                   {"max_error_S^z", err_sz},
                                   {"max_error_C(d)", err_c}});
  }

  report.schedule_holds = true;
  for (std::size_t k = 1; k < report.max_error_c.size(); ++k)
    if (!(report.max_error_c[k] < report.max_error_c[k - 1])) report.schedule_holds = false;
  return report;
}

std::vector<std::string> convergence_warnings(const RunSpec& spec) {
  ChainConfig doubled = spec.chain;
  doubled.n_sites *= 2;

  struct Probe {
    ChainConfig base;
    TimePoint when;
    std::string where;
  };
  std::vector<Probe> probes;
  if (spec.command == Command::timeseries) {
    const auto times = spec.time_grid();
    for (std::size_t i : sample_indices(times.size(), kConvergenceSamples))
      probes.push_back({spec.chain, TimePoint::at(times[i]), "t=" + format_double(times[i])});
  } else if (spec.command == Command::surface) {
    const auto pts = surface_points(spec);
    for (std::size_t i : sample_indices(pts.size(), kConvergenceSamples))
      probes.push_back({with_fields(spec.chain, pts[i].a, pts[i].b), TimePoint::asymptotic(),
                        "a=" + format_double(pts[i].a) + " b=" + format_double(pts[i].b)});
  } else {
    return {};
  }

  std::vector<std::string> warnings;
  for (const Probe& p : probes) {
    ChainConfig big = p.base;
    big.n_sites = doubled.n_sites;
    const double small_c = observe_pair(p.base, spec.offset, p.when).concurrence;
    const double big_c = observe_pair(big, spec.offset, p.when).concurrence;
    const double diff = std::abs(small_c - big_c);
    if (diff > kConvergenceTolerance) {
      std::ostringstream msg;
      msg << "warning: C(d) changes by " << format_double(diff) << " between N="
          << spec.chain.n_sites << " and N=" << big.n_sites << " at " << p.where
          << "; rerun with a larger --n-sites";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

RunResult run(const RunSpec& spec) {
  spec.validate();
  RunResult result;
  switch (spec.command) {
    case Command::timeseries:
      result.data = run_timeseries(spec);
      break;
    case Command::surface:
      result.data = run_surface(spec);
      break;
    case Command::equilibrium:
      result.data = run_equilibrium(spec);
      break;
    case Command::oracle_compare: {
      OracleReport report = run_oracle_compare(spec);
      for (std::size_t k = 0; k < report.sizes.size(); ++k)
        result.diagnostics.push_back("N=" + std::to_string(report.sizes[k]) +
                                     " max |C_pipeline - C_oracle| = " +
                                     format_double(report.max_error_c[k]));
      if (!report.schedule_holds) {
        result.diagnostics.push_back("error: oracle error is not strictly decreasing in N");
        result.exit_code = 3;
      }
      result.data = std::move(report.data);
      break;
    }
  }
  if (!result.data.failures.empty()) {
    result.diagnostics.push_back("error: " + std::to_string(result.data.failures.size()) +
                                 " point(s) failed a numerical check and are reported as nan");
    for (const auto& f : result.data.failures) result.diagnostics.push_back("  " + f);
    result.exit_code = std::max(result.exit_code, 2);
  }
  if (!spec.skip_convergence_check) {
    auto warnings = convergence_warnings(spec);
    result.diagnostics.insert(result.diagnostics.end(), warnings.begin(), warnings.end());
  }
  return result;
}

}  // namespace xyq::cli
