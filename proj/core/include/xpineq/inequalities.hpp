#pragma once

#include <span>

#include "xpineq/cube.hpp"
#include "xpineq/report.hpp"
#include "xpineq/torus.hpp"

namespace xpineq {

/// Long-shift normalization for the torus inequality.
enum class TorusScaling {
  theorem,     // group Z_{8m}: r = 4m, RHS scale m = r/4 (requires 4 | r)
  definition,  // group Z_{2m}: r = m, RHS scale m = r
};

/// Linear X_p inequality for weighted sums of independent signs.
/// lhs^p averages |sum_{j in S} eps_j a_j|^p over |S| = k and signs;
/// rhs terms: gradient (k/n) sum |a_j|^p and diagonal (k/n)^{p/2} E|sum eps_j a_j|^p.
InequalityReport linear_xp(std::span<const double> a, double p, int k);

/// X_p inequality for Rademacher chaos: lhs^p averages ||E_{[n]\S} h||_p^p over
/// |S| = k (exact subset enumeration, C(n,k) <= 2^20). With `refined` the aux
/// block also carries the two-term split with its distinct (k/n) exponents and
/// p-prefactors, each stored bare.
InequalityReport chaos_xp(const CubeFunction& h, double p, int k, bool refined = false);

/// Metric X_p inequality on Z_{2r}^n; wraps difference_stats. The report flags
/// whether the scaling hypothesis m >= sqrt(n/k) holds.
InequalityReport metric_xp(const TorusFunction& f, double p, int k, EvalMode mode,
                           std::uint64_t budget, std::uint64_t seed,
                           TorusScaling scaling = TorusScaling::theorem);

/// Riesz square-function two-sided comparison: reports ||h||_p and the square
/// function norm with their ratio; the p^{-3/2} and p envelopes are reported,
/// never asserted.
InequalityReport lust_piquard_square(const CubeFunction& h, double p);

/// Randomized Riesz comparison on a subset: averaged |sum_{j in S} d_j
/// (partial_j h)|_p^p over signs d against ||Delta_S^{1/2} h||_p. Exact mode
/// enumerates the 2^|S| sign patterns and requires that count within budget.
InequalityReport randomized_riesz(const CubeFunction& h, double p, std::uint32_t subset,
                                  EvalMode mode, std::uint64_t budget, std::uint64_t seed);

/// Explicit-constant contraction ||E_{[n]\S} h||_p <= ||Delta_S^a Delta^{-a} h||_p.
/// A violation beyond 1e-12 slack raises the report's "violation" flag.
InequalityReport jensen_contraction(const CubeFunction& h, std::uint32_t subset, double alpha,
                                    double p);

/// Lower-bound probe for ||Delta^{-alpha}||: evaluates the normalized point
/// mass f_p^n, computes ||Delta^{-alpha}(f - mean)||_{p*} spectrally, and
/// reports it against the explicit (log n)^alpha envelope and the two-sided
/// (log p)^alpha target.
InequalityReport inverse_laplacian_probe(double p, double alpha, int n);

/// Explicit factor-2 smoothing perturbation bound
/// ||f - T_S f||_p <= 2 (E_{x,eps}|f(x+eps)-f(x)|^p)^{1/p}; violations flagged.
InequalityReport ts_perturbation(const TorusFunction& f, std::uint32_t subset, double p);

/// Reusable enumeration state for the chaos lhs: the colex k-subset list and
/// per-subset coordinate positions, plus the small-cube scratch buffer.
/// Summation order is fixed, so results are identical however it is reused.
class ChaosLhsWorkspace {
 public:
  ChaosLhsWorkspace(int n, int k);

  /// mean over |S| = k of ||E_{[n]\S} h||_p^p, from the spectrum of h.
  double lhs_pow(const WalshSpectrum& spectrum, double p) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
  std::vector<std::uint32_t> subsets_;
  std::vector<int> positions_;  // k entries per subset, flattened
  mutable std::vector<double> buf_;
};

// Lean ratio evaluators shared with the search module (no report assembly).
double linear_xp_ratio(std::span<const double> a, double p, int k);
double chaos_xp_ratio(const CubeFunction& h, double p, int k);
double chaos_xp_ratio(const CubeFunction& h, double p, const ChaosLhsWorkspace& workspace);

/// p = 2 closed form for the chaos lhs: sum_A coeff(A)^2 C(n-|A|, k-|A|) / C(n,k).
double chaos_lhs_squared_spectral(const CubeFunction& h, int k);

}  // namespace xpineq
