#pragma once

#include <Eigen/Core>

namespace xyq {

inline constexpr int kMinOracleSites = 4;
inline constexpr int kMaxOracleSites = 12;

// Brute-force reference for the periodic XY ring. Basis index bit k is site k,
// bit value 0 = spin up (sigma^z = +1).

/// The ring Hamiltonian with J = 1:
///   H = -(1+g)/2 sum sx_i sx_{i+1} - (1-g)/2 sum sy_i sy_{i+1} - h sum sz_i,
/// wrap-around bond included. Real symmetric in the sigma^z basis, so it is
/// stored as a real matrix.
struct SpinHamiltonian {
  int n_sites = 0;
  Eigen::MatrixXd matrix;
};

/// Dense 2^N x 2^N density matrix.
struct DenseOperator {
  int n_sites = 0;
  Eigen::MatrixXcd matrix;
};

SpinHamiltonian build_hamiltonian(int n_sites, double gamma, double h);

/// exp(-H/kT)/Z via the spectrum (energies shifted by the ground energy);
/// kT = 0 gives the normalized projector onto the ground space (levels
/// within 1e-10 of the minimum).
DenseOperator thermal_state(const SpinHamiltonian& hamiltonian, double kT);

/// U rho U^dagger with U = exp(-i H t).
DenseOperator evolve(const DenseOperator& state0, const SpinHamiltonian& h_after, double t);

/// Same as evolve(), with the spectral decomposition of h_after and the
/// rotated initial state computed once for many times.
class QuenchEvolution {
 public:
  QuenchEvolution(const DenseOperator& state0, const SpinHamiltonian& h_after);
  DenseOperator at(double t) const;

 private:
  int n_sites_;
  Eigen::MatrixXd basis_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd rotated_;
};

/// Two-site reduced density matrix of sites (i, j), basis (uu, ud, du, dd)
/// with site i the first qubit.
Eigen::Matrix4cd reduce_pair(const DenseOperator& state, int i, int j);

/// Observables of a two-site reduced density matrix, spins S = sigma/2.
struct OraclePair {
  double mz = 0.0;  // <S^z> of the first site
  double sx = 0.0;  // <S^x S^x>
  double sy = 0.0;
  double sz = 0.0;
  double concurrence = 0.0;
};
OraclePair oracle_pair_observables(const Eigen::Matrix4cd& pair);

/// Tr[rho H].
double energy(const DenseOperator& state, const SpinHamiltonian& hamiltonian);

}  // namespace xyq
