#include "xpineq/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "xpineq/cube.hpp"
#include "xpineq/inequalities.hpp"
#include "xpineq/rng.hpp"
#include "xpineq/subsets.hpp"

namespace xpineq {

namespace {

void check_config(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("search: restarts >= 1 required");
  if (cfg.iterations < 1) throw std::invalid_argument("search: iterations >= 1 required");
  if (!(cfg.initial_step > 0.0)) throw std::invalid_argument("search: initial step > 0 required");
  if (!(cfg.step_decay > 0.0) || !(cfg.step_decay < 1.0))
    throw std::invalid_argument("search: step decay in (0,1) required");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("search: tolerance > 0 required");
}

void project_mean_zero(std::vector<double>& v) {
  double mu = 0.0;
  for (double x : v) mu += x;
  mu /= static_cast<double>(v.size());
  for (double& x : v) x -= mu;
}

bool normalize_euclidean(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  if (!(s > 0.0)) return false;
  const double inv = 1.0 / std::sqrt(s);
  for (double& x : v) x *= inv;
  return true;
}

struct RestartOutcome {
  double best = 0.0;
  std::vector<double> x;
  int sweeps = 0;
  bool converged = false;
};

using RatioFn = std::function<double(const std::vector<double>&)>;
using ProjectFn = std::function<void(std::vector<double>&)>;

RestartOutcome ascend(std::vector<double> x, const SearchConfig& cfg, const RatioFn& ratio,
                      const ProjectFn& project) {
  RestartOutcome out;
  project(x);
  if (!normalize_euclidean(x)) return out;
  out.best = ratio(x);
  out.x = x;

  double step = cfg.initial_step;
  std::vector<double> y;
  std::vector<double> grad(x.size());
  while (out.sweeps < cfg.iterations) {
    ++out.sweeps;
    const double sweep_start = out.best;
    bool improved = false;

    for (std::size_t i = 0; i < x.size(); ++i) {
      for (const double dir : {1.0, -1.0}) {
        y = x;
        y[i] += dir * step;
        project(y);
        if (!normalize_euclidean(y)) continue;
        const double r = ratio(y);
        if (r > out.best) {
          out.best = r;
          x = y;
          improved = true;
          break;
        }
      }
    }

    if (!improved) {
      // finite-difference ascent along the projected gradient
      const double h = 0.125 * step;
      double norm_sq = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        y = x;
        y[i] += h;
        project(y);
        const double up = ratio(y);
        y = x;
        y[i] -= h;
        project(y);
        const double down = ratio(y);
        grad[i] = (up - down) / (2.0 * h);
        norm_sq += grad[i] * grad[i];
      }
      if (norm_sq > 0.0) {
        const double scale = step / std::sqrt(norm_sq);
        y = x;
        for (std::size_t i = 0; i < x.size(); ++i) y[i] += scale * grad[i];
        project(y);
        if (normalize_euclidean(y)) {
          const double r = ratio(y);
          if (r > out.best) {
            out.best = r;
            x = y;
            improved = true;
          }
        }
      }
    }

    if (!improved) step *= cfg.step_decay;
    if (out.best - sweep_start < cfg.tolerance && step < cfg.initial_step * 1e-6) {
      out.converged = true;
      break;
    }
  }
  out.x = std::move(x);
  return out;
}

using SeedFn = std::function<std::vector<double>(int restart)>;

SearchResult run_search(const SearchConfig& cfg, const SeedFn& make_seed, const RatioFn& ratio,
                        const ProjectFn& project) {
  check_config(cfg);
  SearchResult res;
  res.config = cfg;
  res.best_ratio = -1.0;
  bool all_converged = true;
  for (int t = 0; t < cfg.restarts; ++t) {
    RestartOutcome out = ascend(make_seed(t), cfg, ratio, project);
    res.restart_best.push_back(out.best);
    res.iterations_used += out.sweeps;
    all_converged = all_converged && out.converged;
    // strict comparison: ties resolve to the lowest restart index
    if (out.best > res.best_ratio) {
      res.best_ratio = out.best;
      res.argmax = std::move(out.x);
    }
  }
  res.converged = all_converged;
  return res;
}

}  // namespace

SearchResult maximize_linear_ratio(int n, int k, double p, const SearchConfig& config) {
  if (n < 1 || n > 20) throw std::invalid_argument("maximize_linear_ratio: n in {1..20} required");
  if (k < 1 || k > n) throw std::invalid_argument("maximize_linear_ratio: k in {1..n} required");
  if (!(p >= 2.0)) throw std::invalid_argument("maximize_linear_ratio: p >= 2 required");

  SearchConfig cfg = config;
  cfg.constraint = SearchConfig::Constraint::none;

  const SeedFn make_seed = [&](int t) {
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    if (t == 0) {
      a.assign(a.size(), 1.0);
    } else if (t == 1) {
      a[0] = 1.0;
    } else {
      RngStream rng(cfg.seed, 9000 + static_cast<std::uint64_t>(t));
      for (double& c : a) c = rng.next_gaussian();
    }
    return a;
  };
  const RatioFn ratio = [&](const std::vector<double>& a) { return linear_xp_ratio(a, p, k); };
  const ProjectFn project = [](std::vector<double>&) {};
  return run_search(cfg, make_seed, ratio, project);
}

SearchResult maximize_chaos_ratio(int n, int k, double p, const SearchConfig& config) {
  if (n < 1 || n > 12) throw std::invalid_argument("maximize_chaos_ratio: n in {1..12} required");
  if (k < 1 || k > n) throw std::invalid_argument("maximize_chaos_ratio: k in {1..n} required");
  if (!(p >= 2.0)) throw std::invalid_argument("maximize_chaos_ratio: p >= 2 required");

  SearchConfig cfg = config;
  cfg.constraint = SearchConfig::Constraint::mean_zero;
  const ChaosLhsWorkspace ws(n, k);

  const SeedFn make_seed = [&](int t) {
    if (t == 0) return CubeFunction::walsh_character(n, first_subset(k)).values();
    if (t == 1) return CubeFunction::walsh_character(n, 1u).values();
    if (t == 2) {
      // degree-one lift of the linear extremizer
      SearchConfig lin = cfg;
      lin.restarts = std::min(cfg.restarts, 4);
      lin.iterations = std::min(cfg.iterations, 30);
      const SearchResult linear = maximize_linear_ratio(n, k, p, lin);
      return CubeFunction::degree_one(linear.argmax).values();
    }
    RngStream rng(cfg.seed, 9000 + static_cast<std::uint64_t>(t));
    std::vector<double> v(std::size_t{1} << n);
    for (double& x : v) x = rng.next_gaussian();
    return v;
  };
  const RatioFn ratio = [&](const std::vector<double>& v) {
    return chaos_xp_ratio(CubeFunction(n, v), p, ws);
  };
  const ProjectFn project = [](std::vector<double>& v) { project_mean_zero(v); };
  return run_search(cfg, make_seed, ratio, project);
}

int k_for_rule(KRule rule, int fixed_k, int n) {
  switch (rule) {
    case KRule::fixed:
      if (fixed_k < 1 || fixed_k > n) throw std::invalid_argument("k rule: fixed k outside {1..n}");
      return fixed_k;
    case KRule::half:
      return (n + 1) / 2;
    case KRule::sqrt: {
      int s = 1;
      while (s * s < n) ++s;
      return s;
    }
  }
  throw std::invalid_argument("k rule: unknown rule");
}

std::vector<SweepEntry> constant_sweep(std::span<const int> n_values, KRule rule, int fixed_k,
                                       double p, const SearchConfig& config,
                                       SearchObjective objective) {
  std::vector<SweepEntry> table;
  table.reserve(n_values.size());
  for (const int n : n_values) {
    SweepEntry entry;
    entry.n = n;
    entry.k = k_for_rule(rule, fixed_k, n);
    SearchConfig cfg = config;
    cfg.seed = mix_seed(config.seed, static_cast<std::uint64_t>(n));
    entry.result = objective == SearchObjective::linear
                       ? maximize_linear_ratio(n, entry.k, p, cfg)
                       : maximize_chaos_ratio(n, entry.k, p, cfg);
    table.push_back(std::move(entry));
  }
  return table;
}

}  // namespace xpineq
