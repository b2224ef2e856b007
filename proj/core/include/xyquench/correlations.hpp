#pragma once

#include <complex>
#include <span>
#include <vector>

#include "xyquench/mode_dynamics.hpp"
#include "xyquench/mode_lattice.hpp"

namespace xyq {

/// Majorana-type site operators A_i = b+_i + b_i and B_i = b+_i - b_i.
enum class SiteOp { A, B };

/// Wick contractions <B_l A_{l+d}>, <A_l A_{l+d}>, <B_l B_{l+d}> of the evolved
/// Gaussian state for d = 0..max_offset, cached for one (config, time).
///
/// <B_l A_m> is stored as its cos(d phi) and sin(d phi) parts so that negative
/// offsets (needed for <A_l B_m> = -<B_m A_l>) come for free.
class ContractionTable {
 public:
  ContractionTable(const ChainConfig& config, TimePoint when, int max_offset);
  ContractionTable(std::span<const Mode> modes, const ChainConfig& config, TimePoint when,
                   int max_offset);

  int max_offset() const { return static_cast<int>(ba_cos_.size()) - 1; }
  const ChainConfig& config() const { return config_; }
  TimePoint when() const { return when_; }

  /// <B_l A_{l+d}> for |d| <= max_offset.
  double ba(int d) const;
  /// <A_l A_{l+d}> and <B_l B_{l+d}> from the mode sums, |d| <= max_offset.
  std::complex<double> aa(int d) const;
  std::complex<double> bb(int d) const;

  /// <X_i Y_j> for arbitrary operator kinds and sites within range.
  std::complex<double> contraction(SiteOp x, int site_x, SiteOp y, int site_y) const;

 private:
  ChainConfig config_;
  TimePoint when_;
  std::vector<double> ba_cos_;
  std::vector<double> ba_sin_;
  std::vector<double> aa_cos_;  // real part of <A_l A_{l+d}>; <B B> has the opposite sign
  std::vector<double> ab_imag_; // shared imaginary part of <A A> and <B B>
};

double contraction_ba(const ChainConfig& config, int d, TimePoint when);
std::complex<double> contraction_aa(const ChainConfig& config, int d, TimePoint when);
std::complex<double> contraction_bb(const ChainConfig& config, int d, TimePoint when);

/// Magnetization per site <S^z> = <sigma^z>/2 from its own mode sum.
double magnetization_z(const ChainConfig& config, TimePoint when);
double magnetization_z(std::span<const Mode> modes, const ChainConfig& config, TimePoint when);

/// Spin-spin correlators <S^a_l S^a_{l+d}> (S = sigma/2) as Pfaffians of
/// contraction matrices. Require 1 <= d <= table.max_offset().
std::complex<double> correlator_xx_complex(const ContractionTable& table, int d);
std::complex<double> correlator_yy_complex(const ContractionTable& table, int d);
std::complex<double> correlator_zz_complex(const ContractionTable& table, int d);

/// Real parts of the above; NumericalFailure if the imaginary residue exceeds
/// kImagResidue.
double correlator_xx(const ContractionTable& table, int d);
double correlator_yy(const ContractionTable& table, int d);
double correlator_zz(const ContractionTable& table, int d);

double correlator_xx(const ChainConfig& config, int d, TimePoint when);
double correlator_yy(const ChainConfig& config, int d, TimePoint when);
double correlator_zz(const ChainConfig& config, int d, TimePoint when);

inline constexpr double kImagResidue = 1e-10;

}  // namespace xyq
