#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "xpineq/torus.hpp"

namespace xpineq {

/// Structured two-sided evaluation of one inequality instance.
///
/// The right side is stored as a named decomposition of nonnegative terms with
/// their explicit prefactors folded in; implicit (unknown) constants are never
/// a field. The headline number is
///   ratio = lhs / (sum of rhs_terms)^(1/root_exponent),
/// reported as 0 when the right side vanishes.
struct InequalityReport {
  std::string name;
  std::map<std::string, double> params;
  double lhs = 0.0;
  std::map<std::string, double> rhs_terms;
  double ratio = 0.0;
  double root_exponent = 1.0;
  EvalMode mode = EvalMode::exact;
  std::map<std::string, double> stderrs;  // per-term standard errors; Monte Carlo only
  std::map<std::string, double> aux;      // envelopes and other side outputs
  std::map<std::string, bool> flags;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
};

/// Recomputes the ratio from lhs/rhs_terms/root_exponent as stored.
double recompute_ratio(const InequalityReport& report);

/// Sum of rhs_terms raised to 1/root_exponent (the "rhs core").
double rhs_core(const InequalityReport& report);

}  // namespace xpineq
