#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xyquench/correlations.hpp"
#include "xyquench/ed_oracle.hpp"
#include "xyquench/errors.hpp"
#include "xyquench/pipeline.hpp"

using namespace xyq;

namespace {

ChainConfig chain(int n, double gamma, double kt, double a, double b) {
  ChainConfig c;
  c.n_sites = n;
  c.gamma = gamma;
  c.kT = kt;
  c.field_before = a;
  c.field_after = b;
  return c;
}

// (2/N) sum_{p=1}^{N/2} cos(2 pi p d / N), summed naively.
double aa_real_reference(int n, int d) {
  double s = 0.0;
  for (int p = 1; p <= n / 2; ++p) s += std::cos(2.0 * std::numbers::pi * p * d / n);
  return 2.0 * s / n;
}

}  // namespace

TEST_CASE("same-site contractions") {
  for (double t : {0.0, 1.5, 9.0}) {
    const ContractionTable table(chain(200, 0.7, 0.3, 0.4, 1.9), TimePoint::at(t), 4);
    CHECK(table.aa(0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(table.bb(0).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(table.aa(0).imag() == 0.0);
    CHECK(table.bb(0).imag() == 0.0);
  }
}

TEST_CASE("real part of <A A> is the bare lattice sum") {
  for (int n : {8, 14, 200}) {
    const ContractionTable table(chain(n, 0.5, 0.2, 0.3, 2.0), TimePoint::at(3.0), n - 1);
    for (int d = 0; d < n; ++d) {
      CHECK(table.aa(d).real() == doctest::Approx(aa_real_reference(n, d)).epsilon(1e-12).scale(1.0));
      CHECK(table.bb(d).real() == doctest::Approx(-aa_real_reference(n, d)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("<A A> is real without a quench") {
  const ContractionTable table(chain(100, 0.8, 0.4, 1.2, 1.2), TimePoint::at(5.0), 6);
  for (int d = -6; d <= 6; ++d) CHECK(table.aa(d).imag() == 0.0);
}

TEST_CASE("magnetization equals half the on-site <B A>") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> g(0.0, 1.0), f(0.0, 4.0), kt(0.0, 2.0), t(0.0, 20.0);
  for (int k = 0; k < 50; ++k) {
    const ChainConfig c = chain(120, g(rng), kt(rng), f(rng), f(rng));
    const TimePoint when = k % 5 == 0 ? TimePoint::asymptotic() : TimePoint::at(t(rng));
    CHECK(magnetization_z(c, when) ==
          doctest::Approx(0.5 * contraction_ba(c, 0, when)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("nearest-neighbour S^x is a single contraction") {
  const ChainConfig c = chain(300, 0.6, 0.25, 0.5, 1.7);
  for (double t : {0.0, 0.8, 4.0}) {
    const ContractionTable table(c, TimePoint::at(t), 2);
    CHECK(correlator_xx(table, 1) == doctest::Approx(0.25 * table.ba(1)).epsilon(1e-14));
    CHECK(correlator_yy(table, 1) == doctest::Approx(0.25 * table.ba(-1)).epsilon(1e-14));
  }
}

TEST_CASE("no quench means no time dependence") {
  const ChainConfig c = chain(400, 0.9, 0.5, 0.7, 0.7);
  const PairObservables ref = observe_pair(c, 1, TimePoint::at(0.0));
  for (double t : {1.0, 13.0}) {
    const PairObservables o = observe_pair(c, 1, TimePoint::at(t));
    CHECK(o.mz == doctest::Approx(ref.mz).epsilon(1e-13));
    CHECK(o.sx == doctest::Approx(ref.sx).epsilon(1e-13));
    CHECK(o.sy == doctest::Approx(ref.sy).epsilon(1e-13));
    CHECK(o.sz == doctest::Approx(ref.sz).epsilon(1e-13));
  }
  const PairObservables inf = observe_pair(c, 1, TimePoint::asymptotic());
  CHECK(inf.sx == doctest::Approx(ref.sx).epsilon(1e-13));
}

TEST_CASE("infinite temperature is featureless") {
  // Only the 1/N^2 grid term from Re<A_0 A_d> = -2/N (odd d) survives.
  const ChainConfig c = chain(200, 0.5, 1e9, 0.3, 2.0);
  const double floor = 1.0 / (200.0 * 200.0) + 1e-8;
  for (double t : {0.0, 2.0}) {
    const ContractionTable table(c, TimePoint::at(t), 4);
    for (int d = 1; d <= 3; ++d) {
      CHECK(std::abs(correlator_xx(table, d)) <= floor);
      CHECK(std::abs(correlator_yy(table, d)) <= floor);
      CHECK(std::abs(correlator_zz(table, d)) <= floor);
    }
    CHECK(std::abs(magnetization_z(c, TimePoint::at(t))) < 1e-8);
  }
}

TEST_CASE("correlators are real to working precision") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> g(0.0, 1.0), f(0.0, 4.0), kt(0.0, 2.0), t(0.0, 30.0);
  for (int k = 0; k < 40; ++k) {
    const ChainConfig c = chain(400, g(rng), kt(rng), f(rng), f(rng));
    const ContractionTable table(c, TimePoint::at(t(rng)), 6);
    for (int d = 1; d <= 5; ++d) {
      CHECK(std::abs(correlator_xx_complex(table, d).imag()) <= kImagResidue);
      CHECK(std::abs(correlator_yy_complex(table, d).imag()) <= kImagResidue);
      CHECK(std::abs(correlator_zz_complex(table, d).imag()) <= kImagResidue);
    }
  }
}

TEST_CASE("S^z correlator is symmetric around the ring") {
  const int n = 16;
  const ContractionTable table(chain(n, 0.7, 0.3, 0.5, 1.5), TimePoint::at(2.0), n - 1);
  for (int d = 1; d < n; ++d) {
    CHECK(correlator_zz(table, d) == doctest::Approx(correlator_zz(table, n - d)).epsilon(1e-12));
  }
}

TEST_CASE("offset validation") {
  const ContractionTable table(chain(20, 1.0, 0.0, 0.5, 1.5), TimePoint::at(1.0), 3);
  CHECK_THROWS_AS(correlator_xx(table, 0), InvalidInput);
  CHECK_THROWS_AS(correlator_xx(table, 4), InvalidInput);
  CHECK_THROWS_AS(table.ba(4), InvalidInput);
  CHECK_THROWS_AS(ContractionTable(chain(20, 1.0, 0.0, 0.5, 1.5), TimePoint::at(1.0), 20),
                  InvalidInput);
  CHECK_THROWS_AS(observe_pair(chain(20, 1.0, 0.0, 0.5, 1.5), 0, TimePoint::at(1.0)),
                  InvalidInput);
}

TEST_CASE("large-ring pipeline tracks exact diagonalization") {
  // Finite-ring boundary effects limit agreement at N = 8.
  const double a = 0.5, b = 1.5, kt = 0.5, gamma = 1.0;
  const int n_ed = 8;
  const DenseOperator rho0 = thermal_state(build_hamiltonian(n_ed, gamma, a), kt);
  const QuenchEvolution evo(rho0, build_hamiltonian(n_ed, gamma, b));
  const auto modes = mode_grid(2000, gamma);
  const ChainConfig c = chain(2000, gamma, kt, a, b);
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    const DenseOperator rho = evo.at(t);
    for (int d : {1, 2}) {
      const OraclePair ed = oracle_pair_observables(reduce_pair(rho, 0, d));
      const PairObservables pl = observe_pair(modes, c, d, TimePoint::at(t));
      CHECK(std::abs(ed.mz - pl.mz) <= 0.06);
      CHECK(std::abs(ed.sx - pl.sx) <= 0.06);
      CHECK(std::abs(ed.sy - pl.sy) <= 0.06);
      CHECK(std::abs(ed.sz - pl.sz) <= 0.06);
    }
  }
}

TEST_CASE("exact diagonalization converges to the ring limit") {
  const double h = 1.5, gamma = 1.0;
  const PairObservables limit = observe_pair(chain(2000, gamma, 0.0, h, h), 1, TimePoint::at(0.0));
  double previous = 1.0;
  for (int n : {6, 8, 10}) {
    const OraclePair ed = oracle_pair_observables(
        reduce_pair(thermal_state(build_hamiltonian(n, gamma, h), 0.0), 0, 1));
    const double err = std::max({std::abs(ed.mz - limit.mz), std::abs(ed.sx - limit.sx),
                                 std::abs(ed.sy - limit.sy), std::abs(ed.sz - limit.sz)});
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 2e-3);
}
