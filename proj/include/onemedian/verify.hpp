#pragma once

#include <string>
#include <vector>

#include "onemedian/instance.hpp"
#include "onemedian/oracle.hpp"
#include "onemedian/solvers.hpp"

namespace onemedian {

struct InvariantCheck {
  std::string name;
  // False when the invariant does not apply to this instance (e.g. the
  // m <= 3 optimality check on larger m).
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<InvariantCheck> checks;
  std::vector<SolveResult> results;  // exact, exact_truncated, sa, nna, spa
  OracleResult oracle{};
  std::vector<double> ratios;        // aligned with results

  bool all_passed() const;
};

// Runs every solver and the oracle on one instance and checks the solver
// invariant chain. Throws SizeGuard above `oracle_cap`.
VerifyReport verify_instance(const Instance& instance, NodeId oracle_cap = kDefaultOracleCap);

}  // namespace onemedian
