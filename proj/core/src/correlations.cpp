#include "xyquench/correlations.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "xyquench/errors.hpp"
#include "xyquench/pairwise_sum.hpp"
#include "xyquench/pfaffian.hpp"

namespace xyq {

namespace {

using cd = std::complex<double>;

double mode_sum(const std::vector<double>& terms, int n_sites) {
  return pairwise_sum(std::span<const double>(terms)) / n_sites;
}

struct Operator {
  SiteOp kind;
  int site;
};

cd string_pfaffian(const ContractionTable& table, const std::vector<Operator>& ops) {
  SkewMatrix m(static_cast<int>(ops.size()));
  for (int i = 0; i < m.dimension(); ++i) {
    for (int j = i + 1; j < m.dimension(); ++j) {
      m.set_upper(i, j, table.contraction(ops[i].kind, ops[i].site, ops[j].kind, ops[j].site));
    }
  }
  return pfaffian(m);
}

void check_offset(const ContractionTable& table, int d) {
  if (d < 1) throw InvalidInput("correlator offset must be >= 1");
  if (d > table.max_offset()) throw InvalidInput("offset exceeds the contraction table range");
}

double real_part(cd value, const char* name) {
  if (std::abs(value.imag()) > kImagResidue) {
    throw NumericalFailure(std::string(name) + " has imaginary residue " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

ContractionTable::ContractionTable(const ChainConfig& config, TimePoint when, int max_offset)
    : ContractionTable(mode_grid(config), config, when, max_offset) {}

ContractionTable::ContractionTable(std::span<const Mode> modes, const ChainConfig& config,
                                   TimePoint when, int max_offset)
    : config_(config), when_(when) {
  config.validate();
  if (max_offset < 0 || max_offset >= config.n_sites) {
    throw InvalidInput("contraction offsets must lie in [0, N)");
  }
  const double a = config.field_before;
  const double b = config.field_after;
  const std::size_t count = modes.size();
  const auto width = static_cast<std::size_t>(max_offset) + 1;

  // Per-mode coefficients, independent of the offset.
  std::vector<double> sin_coef(count), cos_coef(count), imag_coef(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Mode& m = modes[k];
    const ThermalFactors f = thermal_factors(m.lambda_of(a), config.kT);
    const QuenchFactors q = quench_factors(m.lambda_of(b), when);
    const double cb = m.cos_phi + b;
    const double ca = m.cos_phi + a;
    sin_coef[k] = f.tanh_over * m.delta * (1.0 + 2.0 * (a - b) * cb * q.sin_sq_ratio);
    cos_coef[k] = f.tanh_over * (m.delta * m.delta * (b - a) * q.sin_sq_ratio + 2.0 * ca);
    imag_coef[k] = f.tanh_over * m.delta * (a - b) * q.sin4_ratio;
  }

  ba_cos_.resize(width);
  ba_sin_.resize(width);
  aa_cos_.resize(width);
  ab_imag_.resize(width);
  std::vector<double> t_cos(count), t_sin(count), t_aa(count), t_im(count);
  for (std::size_t d = 0; d < width; ++d) {
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = static_cast<double>(d) * modes[k].phi;
      const double c = d == 0 ? 1.0 : std::cos(angle);
      const double s = d == 0 ? 0.0 : std::sin(angle);
      t_cos[k] = c * cos_coef[k];
      t_sin[k] = s * sin_coef[k];
      t_aa[k] = 2.0 * c;
      t_im[k] = s * imag_coef[k];
    }
    ba_cos_[d] = mode_sum(t_cos, config.n_sites);
    ba_sin_[d] = mode_sum(t_sin, config.n_sites);
    aa_cos_[d] = mode_sum(t_aa, config.n_sites);
    ab_imag_[d] = mode_sum(t_im, config.n_sites);
  }
}

double ContractionTable::ba(int d) const {
  const auto k = static_cast<std::size_t>(std::abs(d));
  if (k >= ba_cos_.size()) throw InvalidInput("offset outside contraction table");
  return d >= 0 ? ba_cos_[k] + ba_sin_[k] : ba_cos_[k] - ba_sin_[k];
}

cd ContractionTable::aa(int d) const {
  const auto k = static_cast<std::size_t>(std::abs(d));
  if (k >= aa_cos_.size()) throw InvalidInput("offset outside contraction table");
  return {aa_cos_[k], d >= 0 ? ab_imag_[k] : -ab_imag_[k]};
}

cd ContractionTable::bb(int d) const {
  const auto k = static_cast<std::size_t>(std::abs(d));
  if (k >= aa_cos_.size()) throw InvalidInput("offset outside contraction table");
  return {-aa_cos_[k], d >= 0 ? ab_imag_[k] : -ab_imag_[k]};
}

cd ContractionTable::contraction(SiteOp x, int site_x, SiteOp y, int site_y) const {
  const int d = site_y - site_x;
  if (x == SiteOp::B && y == SiteOp::A) return ba(d);
  // {A_l, B_m} = 0 for all l, m.
  if (x == SiteOp::A && y == SiteOp::B) return -ba(-d);
  if (x == SiteOp::A) return aa(d);
  return bb(d);
}

double contraction_ba(const ChainConfig& config, int d, TimePoint when) {
  if (d < 0 || d >= config.n_sites) throw InvalidInput("offset must lie in [0, N)");
  return ContractionTable(config, when, d).ba(d);
}

cd contraction_aa(const ChainConfig& config, int d, TimePoint when) {
  if (d < 0 || d >= config.n_sites) throw InvalidInput("offset must lie in [0, N)");
  return ContractionTable(config, when, d).aa(d);
}

cd contraction_bb(const ChainConfig& config, int d, TimePoint when) {
  if (d < 0 || d >= config.n_sites) throw InvalidInput("offset must lie in [0, N)");
  return ContractionTable(config, when, d).bb(d);
}

double magnetization_z(std::span<const Mode> modes, const ChainConfig& config, TimePoint when) {
  config.validate();
  const double a = config.field_before;
  const double b = config.field_after;
  std::vector<double> terms(modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const Mode& m = modes[k];
    const ThermalFactors f = thermal_factors(m.lambda_of(a), config.kT);
    const QuenchFactors q = quench_factors(m.lambda_of(b), when);
    terms[k] = 0.25 * f.tanh_over *
               (2.0 * m.delta * m.delta * (b - a) * q.sin_sq_ratio + 4.0 * (m.cos_phi + a));
  }
  return mode_sum(terms, config.n_sites);
}

double magnetization_z(const ChainConfig& config, TimePoint when) {
  return magnetization_z(mode_grid(config), config, when);
}

cd correlator_xx_complex(const ContractionTable& table, int d) {
  check_offset(table, d);
  std::vector<Operator> ops;
  for (int k = 0; k < d; ++k) {
    ops.push_back({SiteOp::B, k});
    ops.push_back({SiteOp::A, k + 1});
  }
  return 0.25 * string_pfaffian(table, ops);
}

cd correlator_yy_complex(const ContractionTable& table, int d) {
  check_offset(table, d);
  std::vector<Operator> ops;
  for (int k = 0; k < d; ++k) {
    ops.push_back({SiteOp::A, k});
    ops.push_back({SiteOp::B, k + 1});
  }
  const double sign = d % 2 == 0 ? 1.0 : -1.0;
  return 0.25 * sign * string_pfaffian(table, ops);
}

cd correlator_zz_complex(const ContractionTable& table, int d) {
  check_offset(table, d);
  const std::vector<Operator> ops{{SiteOp::A, 0}, {SiteOp::B, 0}, {SiteOp::A, d}, {SiteOp::B, d}};
  return 0.25 * string_pfaffian(table, ops);
}

double correlator_xx(const ContractionTable& table, int d) {
  return real_part(correlator_xx_complex(table, d), "S^x");
}
double correlator_yy(const ContractionTable& table, int d) {
  return real_part(correlator_yy_complex(table, d), "S^y");
}
double correlator_zz(const ContractionTable& table, int d) {
  return real_part(correlator_zz_complex(table, d), "S^z");
}

double correlator_xx(const ChainConfig& config, int d, TimePoint when) {
  return correlator_xx(ContractionTable(config, when, d + 1), d);
}
double correlator_yy(const ChainConfig& config, int d, TimePoint when) {
  return correlator_yy(ContractionTable(config, when, d + 1), d);
}
double correlator_zz(const ChainConfig& config, int d, TimePoint when) {
  return correlator_zz(ContractionTable(config, when, d + 1), d);
}

}  // namespace xyq
