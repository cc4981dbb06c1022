#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace xpineq {

/// Derivative-free ratio maximization: random restarts around structured
/// seeds, coordinatewise line search with a decaying step, finite-difference
/// ascent as a fallback when a sweep stalls.
struct SearchConfig {
  int restarts = 8;
  int iterations = 40;        // coordinate sweeps per restart
  double initial_step = 0.5;
  double step_decay = 0.5;
  double tolerance = 1e-9;    // convergence threshold on ratio improvement
  std::uint64_t seed = 0;

  enum class Constraint { none, mean_zero };
  Constraint constraint = Constraint::none;
};

struct SearchResult {
  double best_ratio = 0.0;
  /// Coefficient vector (linear objective) or cube point values (chaos).
  std::vector<double> argmax;
  std::vector<double> restart_best;
  std::int64_t iterations_used = 0;
  bool converged = true;  // false when some restart exhausted its iteration cap
  SearchConfig config;
};

/// Maximize the linear X_p ratio over coefficient vectors a in R^n.
/// Restart seeds: all-ones, the first basis vector, then Gaussian draws.
SearchResult maximize_linear_ratio(int n, int k, double p, const SearchConfig& config);

/// Maximize the chaos X_p ratio over mean-zero functions on {-1,1}^n (n <= 12;
/// the mean is projected out after every proposal). Restart seeds: Walsh
/// characters, the degree-one lift of the linear extremizer, Gaussian draws.
SearchResult maximize_chaos_ratio(int n, int k, double p, const SearchConfig& config);

enum class KRule { fixed, half, sqrt };
enum class SearchObjective { linear, chaos };

int k_for_rule(KRule rule, int fixed_k, int n);

struct SweepEntry {
  int n = 0;
  int k = 0;
  SearchResult result;
};

/// One search per dimension; the per-entry seed is derived from (config.seed, n)
/// so entries are individually reproducible.
std::vector<SweepEntry> constant_sweep(std::span<const int> n_values, KRule rule, int fixed_k,
                                       double p, const SearchConfig& config,
                                       SearchObjective objective);

}  // namespace xpineq
