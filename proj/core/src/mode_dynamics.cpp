#include "xyquench/mode_dynamics.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "xyquench/errors.hpp"

namespace xyq {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Subspace Hamiltonian block for field h.
Eigen::Matrix2cd block_hamiltonian(const Mode& mode, double h) {
  Eigen::Matrix2cd hm;
  hm << cd(2.0 * h, 0.0), -kI * mode.delta,
        kI * mode.delta, cd(-4.0 * mode.cos_phi - 2.0 * h, 0.0);
  return hm;
}

double uniform_part(double boltzmann) {
  const double denom = 1.0 + boltzmann;
  return (1.0 + boltzmann * boltzmann) / (2.0 * denom * denom);
}

double single_part(double boltzmann) {
  const double denom = 1.0 + boltzmann;
  return boltzmann / (denom * denom);
}

}  // namespace

TimePoint TimePoint::at(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidInput("time must be finite and non-negative");
  }
  return TimePoint(t, false);
}

ThermalFactors thermal_factors(double lambda, double kT) {
  if (kT < 0.0) throw InvalidInput("kT must be non-negative");
  if (kT == 0.0) {
    if (lambda < kDegenerateGap) return {0.0, 0.0, 1.0};
    return {1.0, 1.0 / lambda, 0.0};
  }
  const double x = lambda / kT;
  const double th = std::tanh(x);
  return {th, lambda > 0.0 ? th / lambda : 1.0 / kT, std::exp(-2.0 * x)};
}

QuenchFactors quench_factors(double lambda, TimePoint when) {
  if (lambda < kDegenerateGap) {
    if (when.is_asymptotic()) return {0.0, 0.0};
    const double t = when.time();
    return {4.0 * t * t, 4.0 * t};
  }
  if (when.is_asymptotic()) return {0.5 / (lambda * lambda), 0.0};
  const double t = when.time();
  const double s = std::sin(2.0 * t * lambda);
  return {s * s / (lambda * lambda), std::sin(4.0 * t * lambda) / lambda};
}

ModeState thermal_mode_state(const Mode& mode, double a, double kT) {
  if (kT < 0.0) throw InvalidInput("kT must be non-negative");
  const ThermalFactors f = thermal_factors(mode.lambda_of(a), kT);
  const double base = uniform_part(f.boltzmann);
  const double shift = 0.5 * f.tanh_over * (mode.cos_phi + a);

  ModeState s;
  s.occ_block(0, 0) = base - shift;
  s.occ_block(1, 1) = base + shift;
  s.occ_block(0, 1) = kI * (0.25 * mode.delta * f.tanh_over);
  s.occ_block(1, 0) = std::conj(s.occ_block(0, 1));
  s.single_occ = single_part(f.boltzmann);
  return s;
}

ModePropagator step_propagator(const Mode& mode, double b, double t) {
  if (!(t >= 0.0)) throw InvalidInput("propagator time must be non-negative");
  const double lambda = mode.lambda_of(b);
  const double c = mode.cos_phi + b;
  const double sin_ratio = lambda < kDegenerateGap ? 2.0 * t : std::sin(2.0 * t * lambda) / lambda;
  const double co = std::cos(2.0 * t * lambda);

  ModePropagator u;
  u.u_block(0, 0) = cd(co, -c * sin_ratio);
  u.u_block(0, 1) = cd(-0.5 * mode.delta * sin_ratio, 0.0);
  u.u_block(1, 0) = cd(0.5 * mode.delta * sin_ratio, 0.0);
  u.u_block(1, 1) = cd(co, c * sin_ratio);
  u.u_single = 1.0;
  u.global_phase = 2.0 * t * mode.cos_phi;
  return u;
}

ModeState evolve_mode(const ModeState& state0, const ModePropagator& prop) {
  ModeState out;
  out.occ_block = prop.u_block * state0.occ_block * prop.u_block.adjoint();
  out.single_occ = std::norm(prop.u_single) * state0.single_occ;
  out.normalized = state0.normalized;
  return out;
}

ModeState quench_mode_state(const Mode& mode, double a, double b, double kT, TimePoint when) {
  const ThermalFactors f = thermal_factors(mode.lambda_of(a), kT);
  const QuenchFactors q = quench_factors(mode.lambda_of(b), when);
  const double d = mode.delta;
  const double base = uniform_part(f.boltzmann);
  const double shift =
      0.5 * f.tanh_over * ((mode.cos_phi + a) + 0.5 * d * d * (b - a) * q.sin_sq_ratio);
  const double scale = 0.25 * d * f.tanh_over;

  ModeState s;
  s.occ_block(0, 0) = base - shift;
  s.occ_block(1, 1) = base + shift;
  s.occ_block(0, 1) =
      scale * cd((b - a) * q.sin4_ratio,
                 1.0 + 2.0 * (a - b) * (mode.cos_phi + b) * q.sin_sq_ratio);
  s.occ_block(1, 0) = std::conj(s.occ_block(0, 1));
  s.single_occ = single_part(f.boltzmann);
  return s;
}

ModeState asymptotic_mode(const Mode& mode, double a, double b, double kT) {
  return quench_mode_state(mode, a, b, kT, TimePoint::asymptotic());
}

ModeState evolve_mode_numeric(const Mode& mode, double a, double b, double kT, double t,
                              double tol) {
  if (!(tol > 0.0)) throw InvalidInput("integrator tolerance must be positive");
  if (!(t >= 0.0)) throw InvalidInput("integration time must be non-negative");

  ModeState state = thermal_mode_state(mode, a, kT);
  if (t == 0.0) return state;

  using State = std::array<double, 8>;
  const Eigen::Matrix2cd hb = block_hamiltonian(mode, b);

  auto unpack = [](const State& x) {
    Eigen::Matrix2cd m;
    m << cd(x[0], x[1]), cd(x[2], x[3]), cd(x[4], x[5]), cd(x[6], x[7]);
    return m;
  };
  auto pack = [](const Eigen::Matrix2cd& m, State& x) {
    x = {m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(),
         m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(), m(1, 1).imag()};
  };
  auto liouville = [&](const State& x, State& dxdt, double /*t*/) {
    const Eigen::Matrix2cd rho = unpack(x);
    pack(Eigen::Matrix2cd(-kI * (hb * rho - rho * hb)), dxdt);
  };

  State x{};
  pack(state.occ_block, x);
  namespace ode = boost::numeric::odeint;
  try {
    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<State>>(tol, tol);
    ode::integrate_adaptive(stepper, liouville, x, 0.0, t, std::min(t, 1e-3));
  } catch (const std::exception& e) {
    throw NumericalFailure(std::string("mode integration failed: ") + e.what());
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw NumericalFailure("mode integration produced non-finite values");
  }
  state.occ_block = unpack(x);
  return state;
}

}  // namespace xyq
