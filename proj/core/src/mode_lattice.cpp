#include "xyquench/mode_lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xyquench/errors.hpp"

namespace xyq {

namespace {

void check_sites(int n_sites) {
  if (n_sites < 4 || n_sites % 2 != 0) {
    throw InvalidInput("n_sites must be an even integer >= 4 (got " +
                       std::to_string(n_sites) + ")");
  }
}

}  // namespace

void ChainConfig::validate() const {
  check_sites(n_sites);
  if (!(kT >= 0.0)) throw InvalidInput("kT must be non-negative");
  if (!std::isfinite(gamma) || !std::isfinite(field_before) || !std::isfinite(field_after) ||
      !std::isfinite(kT)) {
    throw InvalidInput("chain parameters must be finite");
  }
}

double dispersion(double phi, double h, double gamma) {
  const double c = std::cos(phi) + h;
  const double s = gamma * std::sin(phi);
  return std::hypot(c, s);
}

double Mode::lambda_of(double h) const { return std::hypot(cos_phi + h, gamma * sin_phi); }

std::vector<Mode> mode_grid(int n_sites, double gamma) {
  check_sites(n_sites);
  const int half = n_sites / 2;
  std::vector<Mode> modes;
  modes.reserve(static_cast<std::size_t>(half));
  for (int p = 1; p <= half; ++p) {
    Mode m;
    m.p = p;
    m.gamma = gamma;
    if (p == half) {
      m.phi = std::numbers::pi;
      m.cos_phi = -1.0;
      m.sin_phi = 0.0;
    } else {
      m.phi = 2.0 * std::numbers::pi * p / n_sites;
      m.cos_phi = std::cos(m.phi);
      m.sin_phi = std::sin(m.phi);
    }
    m.delta = 2.0 * gamma * m.sin_phi;
    modes.push_back(m);
  }
  return modes;
}

std::vector<Mode> mode_grid(const ChainConfig& config) {
  config.validate();
  return mode_grid(config.n_sites, config.gamma);
}

}  // namespace xyq
