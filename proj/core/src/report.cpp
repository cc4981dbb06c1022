#include "xpineq/report.hpp"

#include "xpineq/cube.hpp"

namespace xpineq {

double rhs_core(const InequalityReport& report) {
  double sum = 0.0;
  for (const auto& [name, value] : report.rhs_terms) sum += value;
  return root_p(sum, report.root_exponent);
}

double recompute_ratio(const InequalityReport& report) {
  const double core = rhs_core(report);
  return core > 0.0 ? report.lhs / core : 0.0;
}

}  // namespace xpineq
