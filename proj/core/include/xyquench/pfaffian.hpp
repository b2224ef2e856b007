#pragma once

#include <complex>

#include <Eigen/Core>

namespace xyq {

/// Even-dimensional skew-symmetric complex matrix. Only the strict upper
/// triangle is ever written; the lower triangle mirrors it with a sign flip.
class SkewMatrix {
 public:
  explicit SkewMatrix(int dimension);

  int dimension() const { return static_cast<int>(m_.rows()); }

  /// Sets a(i, j) = value and a(j, i) = -value. Requires i < j.
  void set_upper(int i, int j, std::complex<double> value);
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

  const Eigen::MatrixXcd& dense() const { return m_; }

  /// Builds from a dense matrix, reading only its strict upper triangle.
  static SkewMatrix from_upper(const Eigen::MatrixXcd& m);

 private:
  Eigen::MatrixXcd m_;
};

/// Pfaffian. Expansion along the first row for dimension <= 8, skew-symmetric
/// Parlett-Reid elimination with partial pivoting above. pf of the empty
/// matrix is 1.
std::complex<double> pfaffian(const SkewMatrix& m);

namespace detail {
std::complex<double> pfaffian_expansion(const Eigen::MatrixXcd& a);
std::complex<double> pfaffian_elimination(Eigen::MatrixXcd a);
}  // namespace detail

}  // namespace xyq
