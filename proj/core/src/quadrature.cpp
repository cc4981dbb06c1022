#include "xpineq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace xpineq {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr int kGaussOrder = 8;
constexpr double kGaussNodes[kGaussOrder] = {
    -0.9602898564975362316835609, -0.7966664774136267395915539, -0.5255324099163289858177390,
    -0.1834346424956498049394761, 0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr double kGaussWeights[kGaussOrder] = {
    0.1012285362903762591525314, 0.2223810344533744705443560, 0.3137066458778872873379622,
    0.3626837833783619829651660, 0.3626837833783619829651660, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

// e^{-s Delta} h, computed pointwise: the heat kernel factors over coordinates
// into (1+e^{-s})/2 * I + (1-e^{-s})/2 * flip_j.
void apply_heat_pointwise(std::vector<double>& v, int n, double s) {
  const double decay = std::exp(-s);
  const double keep = 0.5 * (1.0 + decay);
  const double cross = 0.5 * (1.0 - decay);
  for (int j = 0; j < n; ++j) {
    const std::uint32_t bit = std::uint32_t{1} << j;
    for (std::uint32_t b = 0; b < v.size(); ++b) {
      if (b & bit) continue;
      const double lo = v[b];
      const double hi = v[b | bit];
      v[b] = keep * lo + cross * hi;
      v[b | bit] = cross * lo + keep * hi;
    }
  }
}

}  // namespace

QuadratureResult inverse_laplacian_quadrature(const CubeFunction& h, double alpha,
                                              const QuadratureSpec& spec) {
  if (!(alpha > 0.0)) throw std::invalid_argument("inverse_laplacian_quadrature: alpha > 0 required");
  if (spec.node_count < 2 * kGaussOrder || !(spec.t_max > 0.0))
    throw std::invalid_argument("inverse_laplacian_quadrature: bad quadrature spec");

  const int panels = spec.node_count / kGaussOrder;
  const double inv_gamma = 1.0 / std::tgamma(alpha);

  // Geometric panel boundaries T*2^-(panels-1), ..., T/2, T; [0, s_min] is the head.
  std::vector<double> bounds(panels);
  for (int i = 0; i < panels; ++i) bounds[i] = std::ldexp(spec.t_max, -(panels - 1 - i));

  std::vector<double> nodes, weights;  // weights carry s^{alpha-1}/Gamma(alpha)
  nodes.reserve(static_cast<std::size_t>(panels) * kGaussOrder);
  weights.reserve(nodes.capacity());
  for (int i = 0; i + 1 < panels; ++i) {
    const double mid = 0.5 * (bounds[i] + bounds[i + 1]);
    const double half = 0.5 * (bounds[i + 1] - bounds[i]);
    for (int g = 0; g < kGaussOrder; ++g) {
      const double s = mid + half * kGaussNodes[g];
      nodes.push_back(s);
      weights.push_back(half * kGaussWeights[g] * std::pow(s, alpha - 1.0) * inv_gamma);
    }
  }
  const double head_weight = std::pow(bounds[0], alpha) / alpha * inv_gamma;

  // Mean-free copy once; (I - Rad_0) commutes with the semigroup.
  const double mu = mean_value(h);
  std::vector<double> centered = h.values();
  for (double& x : centered) x -= mu;

  std::vector<double> acc(centered.size(), 0.0);
  std::vector<double> work(centered.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    work = centered;
    apply_heat_pointwise(work, h.n(), nodes[i]);
    const double w = weights[i];
    for (std::size_t b = 0; b < acc.size(); ++b) acc[b] += w * work[b];
  }
  for (std::size_t b = 0; b < acc.size(); ++b) acc[b] += head_weight * centered[b];

  // Scalar self-check of the rule against u^{-alpha} on the eigenvalues present.
  double worst = 0.0;
  for (int u = 1; u <= h.n(); ++u) {
    double q = head_weight;
    for (std::size_t i = 0; i < nodes.size(); ++i) q += weights[i] * std::exp(-nodes[i] * u);
    worst = std::max(worst, std::abs(q * std::pow(static_cast<double>(u), alpha) - 1.0));
  }

  return QuadratureResult{CubeFunction(h.n(), std::move(acc)), worst, worst <= spec.tolerance};
}

}  // namespace xpineq
