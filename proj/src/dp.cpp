#include "contractforge/dp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "contractforge/errors.hpp"

namespace contractforge {

std::optional<IdOrdering> detect_ordering(const DaInstance& inst) {
  validate(inst);
  const int n = inst.num_agents();
  const int m = inst.num_actions();

  IdOrdering ord;
  ord.agent_order.resize(n);
  std::iota(ord.agent_order.begin(), ord.agent_order.end(), 0);
  ord.action_order.resize(m);
  std::iota(ord.action_order.begin(), ord.action_order.end(), 1);
  if (n <= 1 || m == 0) return ord;  // no pairwise constraints to satisfy

  // Weakest first: any fixed column is strictly descending under the ordering,
  // so sorting by the first column pins the only candidate agent permutation.
  std::sort(ord.agent_order.begin(), ord.agent_order.end(), [&](int p, int q) {
    const Rational& cp = inst.cost(p, 1);
    const Rational& cq = inst.cost(q, 1);
    if (cp != cq) return cp > cq;
    return p < q;  // tied columns fail verification later; keep the sort deterministic
  });

  // The gap between the two weakest agents is strictly increasing along the
  // action ordering, pinning the only candidate action permutation.
  const int w0 = ord.agent_order[0];
  const int w1 = ord.agent_order[1];
  std::sort(ord.action_order.begin(), ord.action_order.end(), [&](int a, int b) {
    Rational ga = inst.cost(w0, a) - inst.cost(w1, a);
    Rational gb = inst.cost(w0, b) - inst.cost(w1, b);
    if (ga != gb) return ga < gb;
    return a < b;
  });

  // Verify every adjacent agent pair: gaps strictly positive and strictly
  // increasing along the action ordering. Telescoping sums extend both
  // properties to all pairs, so adjacent checks are exhaustive.
  for (int k = 0; k + 1 < n; ++k) {
    const int weak = ord.agent_order[k];
    const int strong = ord.agent_order[k + 1];
    Rational prev = inst.cost(weak, ord.action_order[0]) - inst.cost(strong, ord.action_order[0]);
    if (prev.sign() <= 0) return std::nullopt;
    for (int l = 1; l < m; ++l) {
      Rational gap = inst.cost(weak, ord.action_order[l]) - inst.cost(strong, ord.action_order[l]);
      if (gap <= prev) return std::nullopt;
      prev = std::move(gap);
    }
  }
  return ord;
}

Rational phi(const DaInstance& inst, const IdOrdering& ord, int k, int j) {
  if (j == 0) return 0;
  const int n = static_cast<int>(ord.agent_order.size());
  const int action = ord.action_order[j - 1];
  const int agent = ord.agent_order[k];
  Rational value = inst.reward(action) - inst.cost(agent, action);
  if (k + 1 < n) {
    // Each of the n-k-1 stronger agents pockets this adjacent gap as rent.
    const int next = ord.agent_order[k + 1];
    value -= Rational(n - k - 1) * (inst.cost(agent, action) - inst.cost(next, action));
  }
  return value;
}

DpSolution solve_dp(const DaInstance& inst, const IdOrdering& ord) {
  const int n = inst.num_agents();
  const int m = inst.num_actions();

  DpSolution sol;
  sol.phi.assign(n, std::vector<Rational>(m + 1));
  for (int k = 0; k < n; ++k) {
    for (int j = 1; j <= m; ++j) sol.phi[k][j] = phi(inst, ord, k, j);
  }

  // opt[i][j]: best sum of phi over weakly increasing assignments of the i
  // weakest agents to actions <= j. choice[i][j] is the smallest k such that
  // agents k+1..i (1-based) take action j on an optimal path.
  sol.opt.assign(n + 1, std::vector<Rational>(m + 1));
  std::vector<std::vector<int>> choice(n + 1, std::vector<int>(m + 1));
  for (int j = 1; j <= m; ++j) {
    // suffix[k] = sum of phi[i'][j] for i' = k..n-1 (0-based rows of phi)
    std::vector<Rational> suffix(n + 1);
    for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + sol.phi[k][j];
    for (int i = 0; i <= n; ++i) {
      Rational best = sol.opt[i][j - 1];  // k = i: nobody takes action j
      int best_k = i;
      for (int k = 0; k < i; ++k) {
        Rational cand = sol.opt[k][j - 1] + suffix[k] - suffix[i];
        if (cand > best || (cand == best && k < best_k)) {
          best = std::move(cand);
          best_k = k;
        }
      }
      sol.opt[i][j] = std::move(best);
      choice[i][j] = best_k;
    }
  }
  sol.value = sol.opt[n][m];

  sol.assignment.assign(n, 0);
  int i = n;
  for (int j = m; j >= 1 && i > 0; --j) {
    const int k = choice[i][j];
    for (int t = k + 1; t <= i; ++t) sol.assignment[t - 1] = j;
    i = k;
  }
  return sol;
}

PaymentProfile synthesize_payments(const DaInstance& inst, const IdOrdering& ord,
                                   const std::vector<int>& assignment) {
  const int n = inst.num_agents();
  const int m = inst.num_actions();
  if (static_cast<int>(assignment.size()) != n) {
    throw std::invalid_argument("synthesize_payments: assignment size != number of agents");
  }

  PaymentProfile profile;
  profile.payments.assign(m, Rational(0));
  // Running sum of adjacent gaps at the assigned actions of all weaker agents;
  // agents sharing an action produce the same payment because their gap terms
  // vanish (same action, adjacent agents' costs telescope).
  Rational rent = 0;
  for (int k = 0; k < n; ++k) {
    const int j = assignment[k];
    if (k > 0 && assignment[k - 1] > j) {
      throw std::invalid_argument("synthesize_payments: assignment not weakly increasing");
    }
    if (j >= 1) {
      const int action = ord.action_order[j - 1];
      profile.payments[action - 1] = rent + inst.cost(ord.agent_order[k], action);
    }
    if (k + 1 < n && j >= 1) {
      const int action = ord.action_order[j - 1];
      rent += inst.cost(ord.agent_order[k], action) - inst.cost(ord.agent_order[k + 1], action);
    }
  }
  return profile;
}

Solution solve(const DaInstance& inst, const SolveOptions& options) {
  validate(inst);
  const auto ord = detect_ordering(inst);

  const bool want_dp = options.method == SolveOptions::Method::kDp ||
                       (options.method == SolveOptions::Method::kAuto && ord.has_value());
  if (want_dp) {
    if (!ord) throw NotIncreasingDifferences("solve: instance is not increasing-differences");
    DpSolution dp = solve_dp(inst, *ord);
    PaymentProfile profile = synthesize_payments(inst, *ord, dp.assignment);
    Outcome outcome = simulate(inst, profile);
    Solution sol;
    sol.method = SolveMethod::kDp;
    sol.assignment.resize(inst.num_agents());
    for (int k = 0; k < inst.num_agents(); ++k) {
      const int j = dp.assignment[k];
      sol.assignment[ord->agent_order[k]] = j == 0 ? 0 : ord->action_order[j - 1];
    }
    sol.value = dp.value;
    sol.profile = std::move(profile);
    sol.outcome = std::move(outcome);
    return sol;
  }

  OracleResult res = oracle_solve(inst, options.budget, options.jobs);
  Solution sol;
  sol.method = SolveMethod::kOracle;
  sol.assignment = std::move(res.assignment.target);
  sol.value = std::move(res.value);
  sol.profile = std::move(res.profile);
  sol.outcome = std::move(res.outcome);
  return sol;
}

}  // namespace contractforge
