#include "xyquench/pfaffian.hpp"

#include <cstdint>
#include <vector>

#include "xyquench/errors.hpp"

namespace xyq {

using cd = std::complex<double>;

SkewMatrix::SkewMatrix(int dimension) {
  if (dimension < 0 || dimension % 2 != 0) {
    throw InvalidInput("skew matrix dimension must be even and non-negative");
  }
  m_ = Eigen::MatrixXcd::Zero(dimension, dimension);
}

void SkewMatrix::set_upper(int i, int j, cd value) {
  if (!(0 <= i && i < j && j < dimension())) throw InvalidInput("set_upper requires i < j");
  m_(i, j) = value;
  m_(j, i) = -value;
}

SkewMatrix SkewMatrix::from_upper(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InvalidInput("pfaffian input must be square");
  SkewMatrix s(static_cast<int>(m.rows()));
  for (int i = 0; i < s.dimension(); ++i) {
    for (int j = i + 1; j < s.dimension(); ++j) s.set_upper(i, j, m(i, j));
  }
  return s;
}

namespace detail {

namespace {

// Rows/columns still present are the set bits of `remaining`.
cd expand(const Eigen::MatrixXcd& a, std::uint32_t remaining) {
  if (remaining == 0) return 1.0;
  const int first = __builtin_ctz(remaining);
  const std::uint32_t rest = remaining & ~(1u << first);
  cd acc = 0.0;
  double sign = 1.0;
  for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1) {
    const int j = __builtin_ctz(scan);
    const cd aij = a(first, j);
    if (aij != cd(0.0)) acc += sign * aij * expand(a, rest & ~(1u << j));
    sign = -sign;
  }
  return acc;
}

}  // namespace

cd pfaffian_expansion(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  if (n > 30) throw InvalidInput("expansion is limited to small matrices");
  return expand(a, n == 0 ? 0u : ((1u << n) - 1u));
}

cd pfaffian_elimination(Eigen::MatrixXcd a) {
  const Eigen::Index n = a.rows();
  cd pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index pivot = 0;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&pivot);
    pivot += k + 1;
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      pf = -pf;
    }
    if (a(k + 1, k) == cd(0.0)) return 0.0;
    pf *= a(k, k + 1);
    const Eigen::Index rest = n - k - 2;
    if (rest > 0) {
      const Eigen::VectorXcd tau = a.row(k).tail(rest).transpose() / a(k, k + 1);
      const Eigen::VectorXcd col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

}  // namespace detail

cd pfaffian(const SkewMatrix& m) {
  if (m.dimension() <= 8) return detail::pfaffian_expansion(m.dense());
  return detail::pfaffian_elimination(m.dense());
}

}  // namespace xyq
