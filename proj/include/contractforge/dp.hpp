#pragma once

#include <optional>
#include <vector>

#include "contractforge/model.hpp"
#include "contractforge/oracle.hpp"

namespace contractforge {

// Reindexing that witnesses increasing differences. agent_order lists original
// agent indices from weakest (largest costs) to strongest; action_order lists
// original (1-based) action indices in the order of strictly increasing
// adjacent cost gaps.
struct IdOrdering {
  std::vector<int> agent_order;
  std::vector<int> action_order;
};

// nullopt when the instance has no increasing-differences ordering. Sorting
// one cost column (agents) and one adjacent gap row (actions) determines the
// only possible ordering; all adjacent-pair inequalities are then verified,
// which suffices for all pairs because gaps telescope.
std::optional<IdOrdering> detect_ordering(const DaInstance& inst);

// Marginal value phi of reindexed agent k (0-based position in agent_order)
// taking reindexed action j (1-based position in action_order; j = 0 is the
// zero action and yields 0): the reward minus the agent's cost minus the rent
// every stronger agent extracts from the adjacent cost gap.
Rational phi(const DaInstance& inst, const IdOrdering& ord, int k, int j);

struct DpSolution {
  std::vector<int> assignment;            // reindexed action per reindexed agent, weakly increasing
  Rational value;                         // optimal principal payoff
  std::vector<std::vector<Rational>> phi;  // n x (m+1), phi[k][j]
  std::vector<std::vector<Rational>> opt;  // (n+1) x (m+1), opt[i][j] = OPT over first i agents, actions <= j
};

// O(n^2 m) table fill; ties in the recursion prefer the smallest split point,
// making the reported assignment canonical.
DpSolution solve_dp(const DaInstance& inst, const IdOrdering& ord);

// Payments (original action indices) that make `assignment` (reindexed,
// weakly increasing) a best response for every agent: each assigned action is
// paid its taker's cost plus the accumulated adjacent gaps of all weaker
// agents' assigned actions; unassigned actions pay 0.
PaymentProfile synthesize_payments(const DaInstance& inst, const IdOrdering& ord,
                                   const std::vector<int>& assignment);

enum class SolveMethod { kDp, kOracle };

struct SolveOptions {
  enum class Method { kAuto, kDp, kOracle };
  Method method = Method::kAuto;
  long long budget = kDefaultBudget;
  int jobs = 1;
};

struct Solution {
  SolveMethod method;
  PaymentProfile profile;
  Outcome outcome;
  std::vector<int> assignment;  // per original agent, original action indices
  Rational value;
};

// DP when increasing differences holds (or is forced), oracle otherwise.
// Throws NotIncreasingDifferences when method is kDp and the instance is not
// ID; throws BudgetExceeded when the oracle would exceed the budget.
Solution solve(const DaInstance& inst, const SolveOptions& options = {});

}  // namespace contractforge
