#pragma once

#include <optional>
#include <vector>

#include "contractforge/model.hpp"

namespace contractforge {

// Target action per agent, 0..m; need not be monotone in any ordering.
struct Assignment {
  std::vector<int> target;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

inline constexpr long long kDefaultBudget = 1'000'000;

// Cheapest profile under which every agent's best response is its target,
// allowing ties (simulation resolves them toward the principal). Actions no
// agent targets pay 0. Returns nullopt when the requirements are infeasible
// (the difference-constraint graph has a strictly positive cycle).
std::optional<PaymentProfile> minimal_payments(const DaInstance& inst, const Assignment& assignment);

struct OracleResult {
  PaymentProfile profile;
  Outcome outcome;
  Rational value;
  Assignment assignment;  // lexicographically first maximizer
};

// Enumerates all (m+1)^n assignments; throws BudgetExceeded if there are more
// than `budget`. `jobs` splits the enumeration across threads; results are
// merged by (value, then smallest assignment index), so output does not
// depend on the schedule.
OracleResult oracle_solve(const DaInstance& inst, long long budget = kDefaultBudget, int jobs = 1);

// True iff the optimal principal payoff is at least r.
bool decide_mac(const DaInstance& inst, const Rational& r, long long budget = kDefaultBudget, int jobs = 1);

}  // namespace contractforge
