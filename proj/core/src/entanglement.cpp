#include "xyquench/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

#include "xyquench/errors.hpp"

namespace xyq {

namespace {

void clamp_diagonal(TwoSiteState& s, int i) {
  double& v = s.rho(i, i);
  if (v >= 0.0) return;
  if (v < -kClampTolerance) {
    throw NumericalFailure("two-site state has negative population " + std::to_string(v));
  }
  v = 0.0;
  ++s.clamped_entries;
}

double sorted_concurrence(std::array<double, 4> lambdas) {
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

}  // namespace

TwoSiteState two_site_state(double mz, double sx, double sy, double sz) {
  TwoSiteState s;
  s.rho(0, 0) = mz + sz + 0.25;
  s.rho(1, 1) = -sz + 0.25;
  s.rho(2, 2) = -sz + 0.25;
  s.rho(3, 3) = -mz + sz + 0.25;
  s.rho(1, 2) = s.rho(2, 1) = sx + sy;
  s.rho(0, 3) = s.rho(3, 0) = sx - sy;

  for (int i = 0; i < 4; ++i) clamp_diagonal(s, i);
  if (std::abs(s.rho.trace() - 1.0) > kClampTolerance) {
    throw NumericalFailure("two-site state is not normalized");
  }
  if (std::abs(s.rho(0, 3)) > std::sqrt(s.rho(0, 0) * s.rho(3, 3)) + kPositivitySlack ||
      std::abs(s.rho(1, 2)) > std::sqrt(s.rho(1, 1) * s.rho(2, 2)) + kPositivitySlack) {
    throw NumericalFailure("two-site state is not positive semidefinite");
  }
  return s;
}

double concurrence_x(const TwoSiteState& state) {
  const Eigen::Matrix4d& r = state.rho;
  const double outer = std::sqrt(r(0, 0) * r(3, 3));
  const double inner = std::sqrt(r(1, 1) * r(2, 2));
  const double c14 = std::abs(r(0, 3));
  const double c23 = std::abs(r(1, 2));
  return sorted_concurrence(
      {outer + c14, inner + c23, std::abs(outer - c14), std::abs(inner - c23)});
}

double concurrence_general(const Eigen::Matrix4cd& rho) {
  constexpr double tol = 1e-8;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw InvalidInput("invalid state: density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > tol) throw InvalidInput("invalid state: trace != 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> herm(rho, Eigen::EigenvaluesOnly);
  if (herm.eigenvalues().minCoeff() < -tol) {
    throw InvalidInput("invalid state: negative eigenvalue " +
                       std::to_string(herm.eigenvalues().minCoeff()));
  }

  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  const Eigen::Matrix4cd tilde = flip * rho.conjugate() * flip;
  const Eigen::Matrix4cd product = rho * tilde;

  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, false);
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) {
    lambdas[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  }
  return sorted_concurrence(lambdas);
}

double binary_entropy(double x) {
  auto term = [](double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); };
  return term(x) + term(1.0 - x);
}

double entanglement_of_formation(double concurrence) {
  constexpr double slack = 1e-12;
  if (!(concurrence >= -slack && concurrence <= 1.0 + slack)) {
    throw InvalidInput("concurrence must lie in [0, 1]");
  }
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

}  // namespace xyq
