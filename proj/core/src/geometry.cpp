#include "xpineq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xpineq {

namespace {

void check_grid_domain(double p, double q, std::int64_t m, std::int64_t n) {
  if (!(p > 2.0)) throw std::invalid_argument("geometry: p > 2 required");
  if (!(q >= 2.0) || !(q < p)) throw std::invalid_argument("geometry: 2 <= q < p required");
  if (m < 1 || n < 1) throw std::invalid_argument("geometry: m, n >= 1 required");
}

void check_open_domain(double p, double q) {
  if (!(q > 2.0) || !(q < p)) throw std::invalid_argument("geometry: 2 < q < p required");
}

}  // namespace

double grid_distortion_n_exponent(double p, double q) {
  return (p - q) * (q - 2.0) / (q * q * (p - 2.0));
}

double grid_distortion_m_exponent(double q) { return 1.0 - 2.0 / q; }

double phase_transition_exponent(double p, double q) { return (p - q) / (q * (p - 2.0)); }

double grid_distortion_value(const EmbeddingParams& params) {
  check_grid_domain(params.p, params.q, params.m, params.n);
  const double n_term = std::pow(static_cast<double>(params.n), grid_distortion_n_exponent(params.p, params.q));
  const double m_term = std::pow(static_cast<double>(params.m), grid_distortion_m_exponent(params.q));
  return std::min(n_term, m_term);
}

double phase_transition_threshold(double p, double q, std::int64_t n) {
  check_open_domain(p, q);
  if (n < 1) throw std::invalid_argument("geometry: n >= 1 required");
  return std::pow(static_cast<double>(n), phase_transition_exponent(p, q));
}

GridLowerBound grid_lower_bound(const EmbeddingParams& params) {
  check_grid_domain(params.p, params.q, params.m, params.n);
  const double p = params.p;
  const double q = params.q;
  const double n = static_cast<double>(params.n);
  // n^{p/q - p/2}, shared by all k
  const double n_factor = std::pow(n, p / q - p / 2.0);

  // k >= n / (16 m^2), integer ceiling, clamped into [1, n]
  const std::int64_t m2 = params.m * params.m;
  std::int64_t k_lo = (params.n + 16 * m2 - 1) / (16 * m2);
  k_lo = std::max<std::int64_t>(k_lo, 1);

  GridLowerBound best;
  for (std::int64_t k = k_lo; k <= params.n; ++k) {
    const double kd = static_cast<double>(k);
    const double value = std::pow(kd, 1.0 / q) / std::pow(kd + std::pow(kd, p / 2.0) * n_factor, 1.0 / p);
    if (value > best.value) {
      best.value = value;
      best.k = k;
    }
  }
  return best;
}

SnowflakeBound snowflake_bound(double p, double q, double theta, std::int64_t n) {
  check_open_domain(p, q);
  if (!(theta > 0.0) || !(theta <= 1.0)) throw std::invalid_argument("geometry: theta in (0,1] required");
  if (n < 1) throw std::invalid_argument("geometry: n >= 1 required");
  const double nd = static_cast<double>(n);
  const double n_factor = std::pow(nd, p * (theta / q - 0.5));
  const double k_exponent = theta * (0.5 - 1.0 / q) - 0.5;

  SnowflakeBound best;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double value =
        std::pow(kd + std::pow(kd, p / 2.0) * n_factor, 1.0 / p) * std::pow(kd, k_exponent);
    if (best.k == 0 || value < best.value) {
      best.value = value;
      best.k = k;
    }
  }
  best.value *= std::pow(nd, (1.0 - theta) / 2.0);
  return best;
}

double critical_snowflake_exponent(double p, double q) {
  check_open_domain(p, q);
  return q / p;
}

}  // namespace xpineq
