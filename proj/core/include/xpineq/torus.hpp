#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xpineq/cube.hpp"

namespace xpineq {

enum class EvalMode { exact, monte_carlo };

/// Real-valued function on the discrete torus Z_{2r}^n.
///
/// The group has 2r elements per axis; r is the half-period, so the long
/// diagonal shift of the X_p machinery is always r*eps_S (the definition's
/// Z_{2m} corresponds to r = m, the theorem's Z_{8m} to r = 4m).
///
/// Backing is either a dense table in mixed-radix little-endian order
/// (index = sum_j x_j (2r)^j) or a point oracle, assumed deterministic.
class TorusFunction {
 public:
  static constexpr std::size_t kMaxDenseSize = std::size_t{1} << 26;
  using Oracle = std::function<double(std::span<const int>)>;

  static TorusFunction dense(int r, int n, std::vector<double> values);
  static TorusFunction from_oracle(int r, int n, Oracle oracle);

  // Built-in generator family, spanning smooth and Lipschitz-rough regimes.
  static TorusFunction constant(int r, int n, double c);
  /// f(x) = cos(2 pi x_j / (2r))
  static TorusFunction coordinate_cosine(int r, int n, int j);
  /// f(x) = sum_j a_j cos(2 pi x_j / (2r))
  static TorusFunction cosine_sum(int r, int n, std::span<const double> coefficients);
  /// f(x) = circular distance from x_j to 0 (tent wave, Lipschitz constant 1)
  static TorusFunction coordinate_tent(int r, int n, int j);
  /// i.i.d. uniform values in [-1, 1)
  static TorusFunction random_dense(int r, int n, std::uint64_t seed);
  /// seeded trigonometric polynomial with Gaussian coefficients up to `degree`
  static TorusFunction random_trig(int r, int n, int degree, std::uint64_t seed);

  int r() const { return r_; }
  int n() const { return n_; }
  int period() const { return 2 * r_; }
  bool is_dense() const { return !values_.empty(); }
  std::size_t point_count() const { return point_count_; }
  const std::vector<double>& values() const;

  double at_index(std::size_t idx) const;
  double at(std::span<const int> point) const;

  /// Decode a dense index into coordinates in [0, 2r).
  void decode(std::size_t idx, std::span<int> point) const;
  std::size_t encode(std::span<const int> point) const;

 private:
  TorusFunction(int r, int n);

  int r_;
  int n_;
  std::size_t point_count_;
  std::vector<double> values_;  // empty for oracle backing
  Oracle oracle_;
};

/// Smoothing operator: T_S f(x) = average of f(x + 2 delta_S) over the 2^|S|
/// sign patterns delta on the subset. Dense backing only; |S| <= 20.
TorusFunction t_s_average(const TorusFunction& f, std::uint32_t subset);

/// Same operator through the Fourier route: DFT, multiply frequency xi by
/// prod_{j in S} cos(4 pi xi_j / (2r)), inverse DFT. Cross-check oracle.
TorusFunction t_s_average_dft(const TorusFunction& f, std::uint32_t subset);

/// Chaos lift at the base point x: eps -> f(x + 2 eps) - f(x - 2 eps).
/// Always odd, hence mean-zero. Requires n <= 24.
CubeFunction chaos_lift(const TorusFunction& f, std::span<const int> x);

/// The three expectation terms of the metric X_p inequality.
struct DifferenceStats {
  double p = 0.0;
  int k = 0;
  /// binomial average over |S|=k of E_{x,eps} |f(x + r eps_S) - f(x)|^p
  double long_term = 0.0;
  /// sum_j E_x |f(x+e_j) - f(x)|^p
  double gradient_term = 0.0;
  /// E_{x,eps} |f(x+eps) - f(x)|^p
  double diagonal_term = 0.0;
  EvalMode mode = EvalMode::exact;
  std::uint64_t sample_count = 0;  // per-term samples in Monte Carlo mode
  std::uint64_t seed = 0;
  std::optional<double> long_stderr;
  std::optional<double> gradient_stderr;
  std::optional<double> diagonal_stderr;
};

/// Exact mode enumerates subsets, points and the 2^k relevant signs; it
/// requires dense backing and (2r)^n * 2^n <= 2^26. Monte Carlo draws uniform
/// (S, x, eps) triples in deterministic blocks derived from the seed.
DifferenceStats difference_stats(const TorusFunction& f, double p, int k, EvalMode mode,
                                 std::uint64_t budget, std::uint64_t seed);

/// E_{x,eps} |f(x+eps) - f(x)|^p by exhaustive enumeration (dense backing,
/// (2r)^n * 2^n <= 2^26). This is the full-diagonal average on the right of
/// the factor-2 smoothing bound.
double diagonal_difference_term(const TorusFunction& f, double p);

/// (mean of |f|^p over Z_{2r}^n)^{1/p}; dense backing.
double torus_p_norm(const TorusFunction& f, double p);

/// Same statistics with the long term smoothed: both endpoints pass through
/// T_{[n]\S} and the term is divided by m^p, with m = r/4 (r must be a
/// multiple of 4; this is the theorem's Z_{8m} normalization).
DifferenceStats smoothed_difference_stats(const TorusFunction& f, double p, int k, EvalMode mode,
                                          std::uint64_t budget, std::uint64_t seed);

}  // namespace xpineq
