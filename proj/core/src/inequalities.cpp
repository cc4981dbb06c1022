#include "xpineq/inequalities.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "xpineq/multiplier.hpp"
#include "xpineq/rng.hpp"
#include "xpineq/subsets.hpp"

namespace xpineq {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(InequalityReport& rep, const Stopwatch& sw) {
  rep.ratio = recompute_ratio(rep);
  rep.wall_time_seconds = sw.seconds();
}

void require_mean_zero(const CubeFunction& h, const char* who) {
  if (!is_mean_zero(h)) throw std::invalid_argument(std::string(who) + ": mean-zero input required");
}

// mean over the 2^n sign patterns of |sum_j eps_j a_j|^p, Gray-code walk
double signed_sum_moment(std::span<const double> a, double p) {
  const int n = static_cast<int>(a.size());
  double running = 0.0;
  for (double c : a) running += c;
  std::vector<int> sign_state(a.size(), 0);
  double acc = abs_pow(running, p);
  for (std::uint32_t g = 1; g < (std::uint32_t{1} << n); ++g) {
    const int j = std::countr_zero(g);
    if (sign_state[static_cast<std::size_t>(j)] == 0) {
      running -= 2.0 * a[static_cast<std::size_t>(j)];
      sign_state[static_cast<std::size_t>(j)] = 1;
    } else {
      running += 2.0 * a[static_cast<std::size_t>(j)];
      sign_state[static_cast<std::size_t>(j)] = 0;
    }
    acc += abs_pow(running, p);
  }
  return std::ldexp(acc, -n);
}

double linear_lhs_pow(std::span<const double> a, double p, int k) {
  const int n = static_cast<int>(a.size());
  const std::uint64_t subsets = binomial(n, k);
  double total = 0.0;
  std::uint32_t subset = first_subset(k);
  std::vector<double> picked(static_cast<std::size_t>(k));
  for (std::uint64_t si = 0; si < subsets; ++si, subset = next_subset(subset)) {
    int t = 0;
    for (std::uint32_t m = subset; m != 0; m &= m - 1u)
      picked[static_cast<std::size_t>(t++)] = a[static_cast<std::size_t>(std::countr_zero(m))];
    total += signed_sum_moment(picked, p);
  }
  return total / static_cast<double>(subsets);
}

}  // namespace

double linear_xp_ratio(std::span<const double> a, double p, int k) {
  const int n = static_cast<int>(a.size());
  const double kn = static_cast<double>(k) / n;
  const double lhs = root_p(linear_lhs_pow(a, p, k), p);
  double grad = 0.0;
  for (double c : a) grad += abs_pow(c, p);
  const double rhs_sum = kn * grad + std::pow(kn, p / 2.0) * signed_sum_moment(a, p);
  return rhs_sum > 0.0 ? lhs / root_p(rhs_sum, p) : 0.0;
}

InequalityReport linear_xp(std::span<const double> a, double p, int k) {
  Stopwatch sw;
  const int n = static_cast<int>(a.size());
  if (n < 1 || n > 24) throw std::invalid_argument("linear_xp: n in {1..24} required");
  if (k < 1 || k > n) throw std::invalid_argument("linear_xp: k in {1..n} required");
  if (!(p >= 2.0)) throw std::invalid_argument("linear_xp: p >= 2 required");
  for (double c : a)
    if (!std::isfinite(c)) throw std::invalid_argument("linear_xp: non-finite coefficient");

  const double kn = static_cast<double>(k) / n;
  InequalityReport rep;
  rep.name = "linear_xp";
  rep.params = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}, {"p", p}};
  rep.root_exponent = p;
  rep.lhs = root_p(linear_lhs_pow(a, p, k), p);
  double grad = 0.0;
  for (double c : a) grad += abs_pow(c, p);
  rep.rhs_terms["gradient"] = kn * grad;
  rep.rhs_terms["diagonal"] = std::pow(kn, p / 2.0) * signed_sum_moment(a, p);
  finish(rep, sw);
  return rep;
}

ChaosLhsWorkspace::ChaosLhsWorkspace(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > 20) throw std::invalid_argument("chaos lhs: n in {1..20} required");
  if (k < 1 || k > n) throw std::invalid_argument("chaos lhs: k in {1..n} required");
  const std::uint64_t count = binomial(n, k);
  if (count > (std::uint64_t{1} << 20))
    throw std::invalid_argument("chaos lhs: subset budget C(n,k) <= 2^20 exceeded");
  subsets_.reserve(count);
  positions_.reserve(count * static_cast<std::uint64_t>(k));
  std::uint32_t subset = first_subset(k);
  for (std::uint64_t si = 0; si < count; ++si, subset = next_subset(subset)) {
    subsets_.push_back(subset);
    for (std::uint32_t m = subset; m != 0; m &= m - 1u) positions_.push_back(std::countr_zero(m));
  }
  buf_.resize(std::size_t{1} << k);
}

double ChaosLhsWorkspace::lhs_pow(const WalshSpectrum& spec, double p) const {
  if (spec.n() != n_) throw std::invalid_argument("chaos lhs: dimension mismatch");
  // E_{[n]\S} h lives on the coordinates of S with spectrum {coeff(A)}_{A subset S};
  // gather those 2^k coefficients, invert on the small cube, take the p-th moment.
  double total = 0.0;
  const std::uint32_t points = std::uint32_t{1} << k_;
  for (std::size_t si = 0; si < subsets_.size(); ++si) {
    const int* pos = positions_.data() + si * static_cast<std::size_t>(k_);
    for (std::uint32_t sub = 0; sub < points; ++sub) {
      std::uint32_t freq = 0;
      for (int i = 0; i < k_; ++i)
        if ((sub >> i) & 1u) freq |= std::uint32_t{1} << pos[i];
      buf_[sub] = spec[freq];
    }
    fwht_inplace(buf_);
    double acc = 0.0;
    for (std::uint32_t b = 0; b < points; ++b) acc += abs_pow(buf_[b], p);
    total += std::ldexp(acc, -k_);
  }
  return total / static_cast<double>(subsets_.size());
}

namespace {

// gradient block sum_j ||d_j h||_p^p, computed pointwise
double partial_norm_pow_sum(const CubeFunction& h, double p) {
  double total = 0.0;
  for (int j = 0; j < h.n(); ++j) {
    const std::uint32_t bit = std::uint32_t{1} << j;
    double acc = 0.0;
    for (std::uint32_t b = 0; b < h.size(); ++b) acc += abs_pow(h[b] - h[b ^ bit], p);
    total += std::ldexp(acc, -h.n());
  }
  return total;
}

}  // namespace

double chaos_xp_ratio(const CubeFunction& h, double p, const ChaosLhsWorkspace& workspace) {
  const double kn = static_cast<double>(workspace.k()) / h.n();
  const double lhs = root_p(workspace.lhs_pow(walsh_transform(h), p), p);
  const double rhs_sum =
      kn * partial_norm_pow_sum(h, p) + std::pow(kn, p / 2.0) * abs_pow(p_norm(h, p), p);
  return rhs_sum > 0.0 ? lhs / root_p(rhs_sum, p) : 0.0;
}

double chaos_xp_ratio(const CubeFunction& h, double p, int k) {
  return chaos_xp_ratio(h, p, ChaosLhsWorkspace(h.n(), k));
}

double chaos_lhs_squared_spectral(const CubeFunction& h, int k) {
  const int n = h.n();
  const WalshSpectrum spec = walsh_transform(h);
  const double denom = static_cast<double>(binomial(n, k));
  double acc = 0.0;
  for (std::uint32_t freq = 1; freq < spec.size(); ++freq) {
    const int a = std::popcount(freq);
    if (a > k) continue;
    acc += spec[freq] * spec[freq] * static_cast<double>(binomial(n - a, k - a)) / denom;
  }
  return acc;
}

InequalityReport chaos_xp(const CubeFunction& h, double p, int k, bool refined) {
  Stopwatch sw;
  if (!(p >= 2.0)) throw std::invalid_argument("chaos_xp: p >= 2 required");
  require_mean_zero(h, "chaos_xp");
  const int n = h.n();
  const ChaosLhsWorkspace ws(n, k);
  const double kn = static_cast<double>(k) / n;

  InequalityReport rep;
  rep.name = "chaos_xp";
  rep.params = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}, {"p", p}};
  rep.root_exponent = p;
  rep.lhs = root_p(ws.lhs_pow(walsh_transform(h), p), p);
  const double grad_sum = partial_norm_pow_sum(h, p);
  const double h_norm = p_norm(h, p);
  rep.rhs_terms["gradient"] = kn * grad_sum;
  rep.rhs_terms["diagonal"] = std::pow(kn, p / 2.0) * abs_pow(h_norm, p);
  if (refined) {
    rep.aux["refined_gradient_term"] = std::pow(kn, 1.0 / p) * root_p(grad_sum, p);
    rep.aux["refined_gradient_prefactor"] = std::pow(p, 2.5) / std::sqrt(std::log(p));
    rep.aux["refined_diagonal_term"] = std::sqrt(kn) * h_norm;
    rep.aux["refined_diagonal_prefactor"] = std::pow(p, 4.0) / std::log(p);
  }
  finish(rep, sw);
  return rep;
}

InequalityReport metric_xp(const TorusFunction& f, double p, int k, EvalMode mode,
                           std::uint64_t budget, std::uint64_t seed, TorusScaling scaling) {
  Stopwatch sw;
  if (!(p >= 2.0)) throw std::invalid_argument("metric_xp: p >= 2 required");
  const int n = f.n();
  std::int64_t m = f.r();
  if (scaling == TorusScaling::theorem) {
    if (f.r() % 4 != 0)
      throw std::invalid_argument("metric_xp: theorem scaling requires r divisible by 4 (r = 4m)");
    m = f.r() / 4;
  }

  const DifferenceStats stats = difference_stats(f, p, k, mode, budget, seed);
  const double kn = static_cast<double>(k) / n;
  const double m_pow = abs_pow(static_cast<double>(m), p);
  const double grad_scale = m_pow * kn;
  const double diag_scale = m_pow * std::pow(kn, p / 2.0);

  InequalityReport rep;
  rep.name = "metric_xp";
  rep.params = {{"n", static_cast<double>(n)},      {"k", static_cast<double>(k)},
                {"p", p},                           {"r", static_cast<double>(f.r())},
                {"m", static_cast<double>(m)},      {"budget", static_cast<double>(budget)}};
  rep.root_exponent = p;
  rep.mode = mode;
  rep.seed = seed;
  rep.lhs = root_p(stats.long_term, p);
  rep.rhs_terms["gradient"] = grad_scale * stats.gradient_term;
  rep.rhs_terms["diagonal"] = diag_scale * stats.diagonal_term;
  rep.flags["hypothesis_violated"] = m * m * k < n;  // m >= sqrt(n/k), exact in integers
  if (mode == EvalMode::monte_carlo) {
    rep.stderrs["long_term"] = stats.long_stderr.value_or(0.0);
    rep.stderrs["gradient"] = grad_scale * stats.gradient_stderr.value_or(0.0);
    rep.stderrs["diagonal"] = diag_scale * stats.diagonal_stderr.value_or(0.0);
    rep.aux["sample_count"] = static_cast<double>(stats.sample_count);
  }
  finish(rep, sw);
  return rep;
}

InequalityReport lust_piquard_square(const CubeFunction& h, double p) {
  Stopwatch sw;
  if (!(p >= 2.0)) throw std::invalid_argument("lust_piquard_square: p >= 2 required");
  require_mean_zero(h, "lust_piquard_square");

  InequalityReport rep;
  rep.name = "lust_piquard_square";
  rep.params = {{"n", static_cast<double>(h.n())}, {"p", p}};
  rep.root_exponent = p;
  const double square_norm = p_norm(riesz_square_function(h), p);
  const double h_norm = p_norm(h, p);
  rep.lhs = square_norm;
  rep.rhs_terms["h_norm_pow"] = abs_pow(h_norm, p);
  rep.aux["envelope_lower"] = std::pow(p, -1.5);
  rep.aux["envelope_upper"] = p;
  rep.aux["ratio_inverse"] = square_norm > 0.0 ? h_norm / square_norm : 0.0;
  finish(rep, sw);
  return rep;
}

InequalityReport randomized_riesz(const CubeFunction& h, double p, std::uint32_t subset,
                                  EvalMode mode, std::uint64_t budget, std::uint64_t seed) {
  Stopwatch sw;
  if (!(p >= 2.0)) throw std::invalid_argument("randomized_riesz: p >= 2 required");
  require_mean_zero(h, "randomized_riesz");
  const int n = h.n();
  if (subset >> n) throw std::invalid_argument("randomized_riesz: subset outside {0..n-1}");
  const std::vector<int> pos = subset_positions(subset);
  const int s_size = static_cast<int>(pos.size());

  // precompute the partial derivatives over S
  std::vector<std::vector<double>> partials;
  partials.reserve(pos.size());
  for (int j : pos) partials.push_back(partial_derivative(h, j).values());

  const auto signed_combination_pow = [&](std::uint64_t signs) {
    double acc = 0.0;
    for (std::uint32_t b = 0; b < h.size(); ++b) {
      double v = 0.0;
      for (int i = 0; i < s_size; ++i)
        v += ((signs >> i) & 1u) ? -partials[static_cast<std::size_t>(i)][b]
                                 : partials[static_cast<std::size_t>(i)][b];
      acc += abs_pow(v, p);
    }
    return std::ldexp(acc, -n);
  };

  InequalityReport rep;
  rep.name = "randomized_riesz";
  rep.params = {{"n", static_cast<double>(n)},
                {"p", p},
                {"S", static_cast<double>(subset)},
                {"budget", static_cast<double>(budget)}};
  rep.root_exponent = p;
  rep.mode = mode;
  rep.seed = seed;

  double lhs_pow = 0.0;
  if (mode == EvalMode::exact) {
    const std::uint64_t patterns = std::uint64_t{1} << s_size;
    if (patterns > budget)
      throw std::invalid_argument("randomized_riesz: 2^|S| sign enumeration exceeds budget");
    for (std::uint64_t signs = 0; signs < patterns; ++signs) lhs_pow += signed_combination_pow(signs);
    lhs_pow /= static_cast<double>(patterns);
  } else {
    if (budget == 0) throw std::invalid_argument("randomized_riesz: monte_carlo budget must be positive");
    double sum = 0.0, sum_sq = 0.0;
    RngStream rng(seed, 7);
    for (std::uint64_t i = 0; i < budget; ++i) {
      const double v = signed_combination_pow(rng.next_u64());
      sum += v;
      sum_sq += v * v;
    }
    lhs_pow = sum / static_cast<double>(budget);
    if (budget >= 2) {
      double var = (sum_sq - static_cast<double>(budget) * lhs_pow * lhs_pow) /
                   static_cast<double>(budget - 1);
      rep.stderrs["lhs_pow"] = std::sqrt(std::max(var, 0.0) / static_cast<double>(budget));
    }
    rep.aux["sample_count"] = static_cast<double>(budget);
  }

  const double rhs =
      p_norm(apply_multiplier(h, FractionalLaplacian{subset, 0.5}), p);
  rep.lhs = root_p(lhs_pow, p);
  rep.rhs_terms["delta_half_norm_pow"] = abs_pow(rhs, p);
  finish(rep, sw);
  return rep;
}

InequalityReport jensen_contraction(const CubeFunction& h, std::uint32_t subset, double alpha,
                                    double p) {
  Stopwatch sw;
  if (!(p >= 1.0)) throw std::invalid_argument("jensen_contraction: p >= 1 required");
  require_mean_zero(h, "jensen_contraction");
  const int n = h.n();
  if (subset >> n) throw std::invalid_argument("jensen_contraction: subset outside {0..n-1}");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1u;

  const double lhs = p_norm(average_over(h, full & ~subset), p);
  WalshSpectrum spec = walsh_transform(h);
  spec = apply_multiplier(spec, FractionalLaplacian{full, -alpha});
  spec = apply_multiplier(spec, FractionalLaplacian{subset, alpha});
  const double rhs = p_norm(inverse_walsh_transform(spec), p);

  InequalityReport rep;
  rep.name = "jensen_contraction";
  rep.params = {{"n", static_cast<double>(n)},
                {"S", static_cast<double>(subset)},
                {"alpha", alpha},
                {"p", p}};
  rep.root_exponent = p;
  rep.lhs = lhs;
  rep.rhs_terms["contraction_norm_pow"] = abs_pow(rhs, p);
  rep.flags["violation"] = lhs > rhs + 1e-12;
  finish(rep, sw);
  return rep;
}

InequalityReport inverse_laplacian_probe(double p, double alpha, int n) {
  Stopwatch sw;
  if (!(p >= 2.0)) throw std::invalid_argument("inverse_laplacian_probe: p >= 2 required");
  if (!(alpha > 0.0)) throw std::invalid_argument("inverse_laplacian_probe: alpha > 0 required");
  if (n < 2) throw std::invalid_argument("inverse_laplacian_probe: n >= 2 required");
  if (n > 20) throw std::invalid_argument("inverse_laplacian_probe: n <= 20 required");
  const double p_star = p / (p - 1.0);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1u;

  // f_p^n = 2^{n/p*} * indicator of (1,...,1); its spectrum is flat 2^{-n/p}.
  const double flat = std::pow(2.0, -static_cast<double>(n) / p);
  WalshSpectrum spec(n, std::vector<double>(std::size_t{1} << n, flat));
  spec = apply_multiplier(spec, FractionalLaplacian{full, -alpha});
  const CubeFunction g = inverse_walsh_transform(spec);
  const double probe_norm = p_norm(g, p_star);

  const double envelope =
      flat * std::pow(std::log(static_cast<double>(n)), alpha) /
      (std::pow(2.0, alpha) * std::tgamma(1.0 + alpha));
  const double target = std::pow(std::log(p), alpha) /
                        (std::pow(2.0, alpha) * std::tgamma(1.0 + alpha));

  // kappa(eps) counts +1 coordinates, i.e. n - popcount of the index
  std::uint64_t kappa_low = 0;
  for (std::uint32_t b = 0; b <= full; ++b)
    if (2 * (n - std::popcount(b)) <= n) ++kappa_low;

  InequalityReport rep;
  rep.name = "inverse_laplacian_probe";
  rep.params = {{"p", p}, {"alpha", alpha}, {"n", static_cast<double>(n)}, {"p_star", p_star}};
  rep.root_exponent = p_star;
  rep.lhs = probe_norm;
  rep.rhs_terms["lower_envelope_pow"] = std::pow(envelope, p_star);
  rep.aux["lower_envelope"] = envelope;
  rep.aux["two_sided_target"] = target;
  rep.aux["kappa_half_count"] = static_cast<double>(kappa_low);
  rep.flags["meets_lower_envelope"] = probe_norm >= envelope;
  rep.flags["kappa_half_ok"] = kappa_low >= (std::uint64_t{1} << (n - 1));
  rep.flags["alpha_exceeds_bound"] = alpha > (5.0 + std::log(p)) / 4.0;
  finish(rep, sw);
  return rep;
}

InequalityReport ts_perturbation(const TorusFunction& f, std::uint32_t subset, double p) {
  Stopwatch sw;
  if (!(p >= 1.0)) throw std::invalid_argument("ts_perturbation: p >= 1 required");
  if (!f.is_dense()) throw std::invalid_argument("ts_perturbation: dense backing required");
  if (subset >> f.n()) throw std::invalid_argument("ts_perturbation: subset outside {0..n-1}");

  const TorusFunction smoothed = t_s_average(f, subset);
  double acc = 0.0;
  for (std::size_t i = 0; i < f.point_count(); ++i)
    acc += abs_pow(f.at_index(i) - smoothed.at_index(i), p);
  const double lhs = root_p(acc / static_cast<double>(f.point_count()), p);
  const double diag = diagonal_difference_term(f, p);

  InequalityReport rep;
  rep.name = "ts_perturbation";
  rep.params = {{"n", static_cast<double>(f.n())},
                {"r", static_cast<double>(f.r())},
                {"S", static_cast<double>(subset)},
                {"p", p}};
  rep.root_exponent = p;
  rep.lhs = lhs;
  rep.rhs_terms["diagonal_scaled"] = abs_pow(2.0, p) * diag;
  rep.flags["violation"] = lhs > 2.0 * root_p(diag, p) + 1e-12;
  finish(rep, sw);
  return rep;
}

}  // namespace xpineq
