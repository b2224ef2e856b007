#include "xyquench/ed_oracle.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "xyquench/entanglement.hpp"
#include "xyquench/errors.hpp"

namespace xyq {

namespace {

using cd = std::complex<double>;

void check_sites(int n) {
  if (n < kMinOracleSites || n > kMaxOracleSites) {
    throw InvalidInput("oracle supports 4 <= N <= 12 sites (got " + std::to_string(n) + ")");
  }
}

int bit(Eigen::Index state, int site) { return static_cast<int>((state >> site) & 1); }

Eigen::MatrixXcd spectral_density(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& weights) {
  const Eigen::MatrixXd rho = vectors * weights.asDiagonal() * vectors.transpose();
  return rho.cast<cd>();
}

}  // namespace

SpinHamiltonian build_hamiltonian(int n_sites, double gamma, double h) {
  check_sites(n_sites);
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  SpinHamiltonian out{n_sites, Eigen::MatrixXd::Zero(dim, dim)};
  Eigen::MatrixXd& m = out.matrix;
  // sx sx flips both spins with amplitude 1; sy sy flips both with amplitude
  // -1 for parallel and +1 for antiparallel spins.
  const double parallel = -0.5 * (1.0 + gamma) + 0.5 * (1.0 - gamma);
  const double antiparallel = -0.5 * (1.0 + gamma) - 0.5 * (1.0 - gamma);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i < n_sites; ++i) {
      diag -= h * (bit(s, i) == 0 ? 1.0 : -1.0);
      const int j = (i + 1) % n_sites;
      const Eigen::Index flipped = s ^ ((Eigen::Index{1} << i) | (Eigen::Index{1} << j));
      m(flipped, s) += bit(s, i) == bit(s, j) ? parallel : antiparallel;
    }
    m(s, s) += diag;
  }
  return out;
}

DenseOperator thermal_state(const SpinHamiltonian& hamiltonian, double kT) {
  if (kT < 0.0) throw InvalidInput("kT must be non-negative");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian.matrix);
  const Eigen::VectorXd& e = solver.eigenvalues();
  const double ground = e(0);
  Eigen::VectorXd w(e.size());
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    if (kT == 0.0) {
      w(k) = e(k) - ground <= 1e-10 ? 1.0 : 0.0;
    } else {
      w(k) = std::exp(-(e(k) - ground) / kT);
    }
  }
  w /= w.sum();
  return {hamiltonian.n_sites, spectral_density(solver.eigenvectors(), w)};
}

QuenchEvolution::QuenchEvolution(const DenseOperator& state0, const SpinHamiltonian& h_after)
    : n_sites_(h_after.n_sites) {
  if (state0.matrix.rows() != h_after.matrix.rows()) {
    throw InvalidInput("state and Hamiltonian dimensions differ");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h_after.matrix);
  basis_ = solver.eigenvectors();
  energies_ = solver.eigenvalues();
  const Eigen::MatrixXcd v = basis_.cast<cd>();
  rotated_ = v.adjoint() * state0.matrix * v;
}

DenseOperator QuenchEvolution::at(double t) const {
  if (!(t >= 0.0)) throw InvalidInput("time must be non-negative");
  const Eigen::Index dim = energies_.size();
  Eigen::VectorXcd phase(dim);
  for (Eigen::Index k = 0; k < dim; ++k) phase(k) = std::polar(1.0, -energies_(k) * t);
  const Eigen::MatrixXcd evolved = phase.asDiagonal() * rotated_ * phase.conjugate().asDiagonal();
  const Eigen::MatrixXcd v = basis_.cast<cd>();
  return {n_sites_, v * evolved * v.adjoint()};
}

DenseOperator evolve(const DenseOperator& state0, const SpinHamiltonian& h_after, double t) {
  return QuenchEvolution(state0, h_after).at(t);
}

Eigen::Matrix4cd reduce_pair(const DenseOperator& state, int i, int j) {
  const int n = state.n_sites;
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidInput("site index out of range");
  if (i == j) throw InvalidInput("reduce_pair needs two distinct sites");
  const Eigen::Index mask = (Eigen::Index{1} << i) | (Eigen::Index{1} << j);
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  const Eigen::Index dim = state.matrix.rows();
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int row = 2 * bit(r, i) + bit(r, j);
    const Eigen::Index rest = r & ~mask;
    for (int col = 0; col < 4; ++col) {
      const Eigen::Index c = rest | (Eigen::Index{(col >> 1) & 1} << i) |
                             (Eigen::Index{col & 1} << j);
      out(row, col) += state.matrix(r, c);
    }
  }
  return out;
}

OraclePair oracle_pair_observables(const Eigen::Matrix4cd& pair) {
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  auto kron = [](const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
    Eigen::Matrix4cd k;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) k.block<2, 2>(2 * a, 2 * b) = x(a, b) * y;
    return k;
  };
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  OraclePair o;
  o.mz = 0.5 * (pair * kron(sz, id)).trace().real();
  o.sx = 0.25 * (pair * kron(sx, sx)).trace().real();
  o.sy = 0.25 * (pair * kron(sy, sy)).trace().real();
  o.sz = 0.25 * (pair * kron(sz, sz)).trace().real();
  o.concurrence = concurrence_general(pair);
  return o;
}

double energy(const DenseOperator& state, const SpinHamiltonian& hamiltonian) {
  return (state.matrix.real().cwiseProduct(hamiltonian.matrix.transpose())).sum();
}

}  // namespace xyq
