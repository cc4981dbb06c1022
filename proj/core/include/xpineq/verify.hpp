#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xpineq/cube.hpp"

namespace xpineq {

/// Outcome of one property campaign. `extremal` is the worst statistic
/// observed over all trials (relative error for identity checks, violation
/// margin for inequality checks); larger is worse.
struct CheckResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double extremal = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass = false;
};

/// Test seams for fault-injection fixtures: when set, the named campaign uses
/// the supplied operator in place of the production one.
struct VerifyHooks {
  /// Replaces Delta_S^alpha Delta^{-alpha} in the Lemma-3.2 contraction check.
  std::function<CubeFunction(const CubeFunction& h, std::uint32_t subset, double alpha)>
      contraction_op;
};

VerifyReport verify_walsh(int n_max, std::uint64_t seed);
VerifyReport verify_torus(int n_max, std::uint64_t seed);
VerifyReport verify_inequalities_exact(int n_max, std::uint64_t seed,
                                       const VerifyHooks& hooks = {});
VerifyReport verify_inequalities_mc(int n_max, std::uint64_t seed);
/// Concatenation of the four suites.
VerifyReport verify_all(int n_max, std::uint64_t seed, const VerifyHooks& hooks = {});

/// Deterministic JSON rendering (stable field order, no timestamps).
std::string verify_report_to_json(const VerifyReport& report, int indent = 2);

}  // namespace xpineq
