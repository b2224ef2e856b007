#pragma once

#include <complex>

#include <Eigen/Core>

#include "xyquench/mode_lattice.hpp"

namespace xyq {

/// Either a finite time t >= 0 after the quench or the t -> infinity limit.
class TimePoint {
 public:
  static TimePoint at(double t);
  static TimePoint asymptotic() { return TimePoint(0.0, true); }

  bool is_asymptotic() const { return asymptotic_; }
  /// Only meaningful when !is_asymptotic().
  double time() const { return t_; }

 private:
  TimePoint(double t, bool asymptotic) : t_(t), asymptotic_(asymptotic) {}
  double t_;
  bool asymptotic_;
};

/// Thermal weights of a mode with initial gap Lambda(a).
///
///   tanh_x    = tanh(beta Lambda)
///   tanh_over = tanh(beta Lambda) / Lambda   (-> beta as Lambda -> 0)
///   boltzmann = exp(-2 beta Lambda)
///
/// At kT = 0: tanh_x = 1 and boltzmann = 0 for Lambda > 0; a degenerate mode
/// (Lambda = 0) is equally populated, i.e. tanh_x = tanh_over = 0, boltzmann = 1.
struct ThermalFactors {
  double tanh_x = 0.0;
  double tanh_over = 0.0;
  double boltzmann = 1.0;
};
ThermalFactors thermal_factors(double lambda, double kT);

/// Oscillatory factors of the quench for a mode with final gap Lambda(b):
///   sin_sq_ratio  = sin^2(2 t Lambda) / Lambda^2   (-> 4 t^2 for Lambda -> 0)
///   sin4_ratio    = sin(4 t Lambda) / Lambda        (-> 4 t)
/// The asymptotic point phase-averages them to 1/(2 Lambda^2) and 0; a mode
/// with Lambda(b) = 0 is frozen and both are reported as 0.
struct QuenchFactors {
  double sin_sq_ratio = 0.0;
  double sin4_ratio = 0.0;
};
QuenchFactors quench_factors(double lambda, TimePoint when);

/// Gaps below this are treated as exactly degenerate.
inline constexpr double kDegenerateGap = 1e-8;

/// Trace-normalized density matrix of one (p, -p) subspace in the basis
/// (|0>, c+_p c+_-p |0>, c+_p |0>, c+_-p |0>). The two singly occupied states
/// always carry the same weight `single_occ`.
struct ModeState {
  Eigen::Matrix2cd occ_block = Eigen::Matrix2cd::Zero();
  double single_occ = 0.0;
  bool normalized = true;

  double trace() const { return occ_block.trace().real() + 2.0 * single_occ; }
  /// Expectation of n_p + n_-p - 1.
  double pair_magnetization() const { return occ_block(1, 1).real() - occ_block(0, 0).real(); }
};

/// Step-quench propagator exp(-i H_p(b) t) without the global phase, which is
/// kept in `global_phase` (= 2 t cos(phi)) but never used by observables.
struct ModePropagator {
  Eigen::Matrix2cd u_block = Eigen::Matrix2cd::Identity();
  std::complex<double> u_single{1.0, 0.0};
  double global_phase = 0.0;
};

/// Normalized exp(-beta H_p(a)); kT = 0 gives the block ground-state projector.
ModeState thermal_mode_state(const Mode& mode, double a, double kT);

/// Closed-form propagator for constant field b; requires t >= 0.
ModePropagator step_propagator(const Mode& mode, double b, double t);

/// U rho U^dagger.
ModeState evolve_mode(const ModeState& state0, const ModePropagator& prop);

/// Closed-form evolved mode state written directly in terms of the quench
/// factors (no matrix products). Also evaluates the phase-averaged limit.
ModeState quench_mode_state(const Mode& mode, double a, double b, double kT, TimePoint when);

/// Phase-averaged t -> infinity state. Equals the thermal state when a == b.
ModeState asymptotic_mode(const Mode& mode, double a, double b, double kT);

/// Integrates i d(rho)/dt = [H_p(b), rho] from the thermal state at field a with
/// an adaptive Dormand-Prince scheme (abs/rel tolerance `tol`). Throws
/// NumericalFailure when the step controller gives up.
ModeState evolve_mode_numeric(const Mode& mode, double a, double b, double kT, double t,
                              double tol);

}  // namespace xyq
