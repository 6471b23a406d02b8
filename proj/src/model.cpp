#include "contractforge/model.hpp"

#include <stdexcept>
#include <string>

namespace contractforge {

void validate(const DaInstance& inst) {
  const auto m = inst.rewards.size();
  for (const auto& r : inst.rewards) {
    if (r.sign() < 0) throw std::invalid_argument("instance: negative reward");
  }
  for (const auto& row : inst.costs) {
    if (row.size() != m) throw std::invalid_argument("instance: cost row length != number of actions");
    for (const auto& c : row) {
      if (c.sign() < 0) throw std::invalid_argument("instance: negative cost");
    }
  }
}

void validate(const PaymentProfile& profile, const DaInstance& inst) {
  if (profile.payments.size() != inst.rewards.size()) {
    throw std::invalid_argument("profile: payment count != number of actions");
  }
  for (const auto& t : profile.payments) {
    if (t.sign() < 0) throw std::invalid_argument("profile: negative payment");
  }
}

int best_response(const DaInstance& inst, const PaymentProfile& profile, int agent) {
  const int m = inst.num_actions();
  // Zero action: utility 0, principal nets 0.
  int best = 0;
  Rational best_utility = 0;
  Rational best_net = 0;
  for (int j = 1; j <= m; ++j) {
    Rational utility = profile.payment(j) - inst.cost(agent, j);
    if (utility < best_utility) continue;
    Rational net = inst.reward(j) - profile.payment(j);
    if (utility > best_utility || net > best_net) {
      best = j;
      best_utility = std::move(utility);
      best_net = std::move(net);
    }
  }
  return best;
}

Outcome simulate(const DaInstance& inst, const PaymentProfile& profile) {
  const int n = inst.num_agents();
  Outcome out;
  out.chosen_action.resize(n);
  out.agent_utility.resize(n);
  for (int i = 0; i < n; ++i) {
    const int j = best_response(inst, profile, i);
    out.chosen_action[i] = j;
    if (j == 0) continue;  // utility and payoff contributions are 0
    out.agent_utility[i] = profile.payment(j) - inst.cost(i, j);
    out.principal_payoff += inst.reward(j) - profile.payment(j);
  }
  return out;
}

}  // namespace contractforge
