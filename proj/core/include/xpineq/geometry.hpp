#pragma once

#include <cstdint>

namespace xpineq {

/// Parameters of the grid / snowflake embedding calculators: source exponent
/// q in [2, p), target exponent p in (2, inf), grid size m, dimension n,
/// snowflake exponent theta in (0, 1].
struct EmbeddingParams {
  double p = 4.0;
  double q = 3.0;
  std::int64_t m = 1;
  std::int64_t n = 1;
  double theta = 1.0;
};

/// min{ n^{(p-q)(q-2)/(q^2(p-2))}, m^{1-2/q} } -- the structural distortion
/// value of the m-grid in l_q^n, implicit constant dropped.
double grid_distortion_value(const EmbeddingParams& params);

double grid_distortion_n_exponent(double p, double q);
double grid_distortion_m_exponent(double q);
double phase_transition_exponent(double p, double q);

/// n^{(p-q)/(q(p-2))}, the grid size where the distortion regime switches.
double phase_transition_threshold(double p, double q, std::int64_t n);

struct GridLowerBound {
  double value = 0.0;
  std::int64_t k = 0;
};

/// max over integer k in [max(1, ceil(n/(16 m^2))), n] of
/// k^{1/q} / (k + k^{p/2} n^{p/q - p/2})^{1/p}, by exhaustive enumeration;
/// smallest maximizing k on ties.
GridLowerBound grid_lower_bound(const EmbeddingParams& params);

struct SnowflakeBound {
  double value = 0.0;
  std::int64_t k = 0;
};

/// n^{(1-theta)/2} * min over k in [n] of
/// (k + k^{p/2} n^{p(theta/q - 1/2)})^{1/p} * k^{theta(1/2 - 1/q) - 1/2};
/// diverges with n exactly when theta > q/p.
SnowflakeBound snowflake_bound(double p, double q, double theta, std::int64_t n);

/// q/p, the largest Hoelder exponent admitting a bi-Lipschitz embedding.
double critical_snowflake_exponent(double p, double q);

}  // namespace xpineq
