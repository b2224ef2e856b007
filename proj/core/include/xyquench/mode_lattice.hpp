#pragma once

#include <vector>

namespace xyq {

/// Static definition of one quench problem on the periodic XY ring.
///
/// The exchange coupling is fixed to J = 1. The transverse field is a step:
/// `field_before` for t <= 0 and `field_after` for t > 0. Temperatures are in
/// energy units (k absorbed); kT = 0 selects the ground-state limit.
struct ChainConfig {
  int n_sites = 2000;
  double gamma = 1.0;
  double kT = 0.0;
  double field_before = 0.0;
  double field_after = 0.0;

  /// Throws InvalidInput unless n_sites is even and >= 4 and kT >= 0.
  void validate() const;

  bool zero_temperature() const { return kT == 0.0; }

  friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

/// Quasiparticle energy scale sqrt((cos(phi) + h)^2 + gamma^2 sin^2(phi)).
double dispersion(double phi, double h, double gamma);

/// One (p, -p) momentum pair of the fermionized chain.
struct Mode {
  int p = 0;
  double phi = 0.0;
  double cos_phi = 1.0;
  double sin_phi = 0.0;  // exactly 0 at phi = pi
  double gamma = 0.0;
  double delta = 0.0;    // 2 gamma sin(phi)

  double alpha_of(double h) const { return -2.0 * cos_phi - 2.0 * h; }
  double lambda_of(double h) const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// Modes p = 1..N/2 with phi_p = 2 pi p / N, strictly increasing in phi.
std::vector<Mode> mode_grid(const ChainConfig& config);
std::vector<Mode> mode_grid(int n_sites, double gamma);

}  // namespace xyq
