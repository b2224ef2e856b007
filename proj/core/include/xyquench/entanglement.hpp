#pragma once

#include <Eigen/Core>

namespace xyq {

/// Two-qubit reduced density matrix in the basis (uu, ud, du, dd), u = +1
/// eigenstate of sigma^z. Phase-flip symmetry leaves only the X pattern:
/// the diagonal plus rho(0,3) = rho(3,0) and rho(1,2) = rho(2,1).
struct TwoSiteState {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  /// Diagonal entries in [-kClampTolerance, 0) that were set to zero.
  int clamped_entries = 0;
};

inline constexpr double kClampTolerance = 1e-10;
inline constexpr double kPositivitySlack = 1e-8;

/// Assembles the X state of a translation-invariant pair from <S^z> and the
/// three correlators <S^a_l S^a_m>. Throws NumericalFailure on trace or
/// positivity violations beyond tolerance.
TwoSiteState two_site_state(double mz, double sx, double sy, double sz);

/// Closed form for X states: 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)),
/// evaluated through the four sorted lambda values.
double concurrence_x(const TwoSiteState& state);

/// Spectral construction from the eigenvalues of rho * (sy x sy) rho^* (sy x sy).
/// Throws InvalidInput if rho is not a density matrix to 1e-8.
double concurrence_general(const Eigen::Matrix4cd& rho);

/// h((1 + sqrt(1 - c^2)) / 2) with h the binary entropy in bits.
double entanglement_of_formation(double concurrence);

/// -x log2 x - (1 - x) log2 (1 - x), with 0 log 0 = 0.
double binary_entropy(double x);

}  // namespace xyq
