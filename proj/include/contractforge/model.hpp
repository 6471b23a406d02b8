#pragma once

#include <vector>

#include "contractforge/rational.hpp"

namespace contractforge {

// Common-contract instance with discrete actions. Actions are indexed 1..m;
// index 0 is the implicit zero action (reward 0, cost 0 for everyone) and is
// never stored or serialized. Agents are indexed 0..n-1.
struct DaInstance {
  std::vector<Rational> rewards;             // rewards[j-1] = rho_j >= 0
  std::vector<std::vector<Rational>> costs;  // costs[i][j-1] = c_{i,j} >= 0

  int num_agents() const { return static_cast<int>(costs.size()); }
  int num_actions() const { return static_cast<int>(rewards.size()); }
  const Rational& cost(int agent, int action) const { return costs[agent][action - 1]; }
  const Rational& reward(int action) const { return rewards[action - 1]; }

  friend bool operator==(const DaInstance&, const DaInstance&) = default;
};

// Throws std::invalid_argument on ragged cost rows or negative entries.
void validate(const DaInstance& inst);

// Payment t_j >= 0 per real action; the zero action always pays 0.
struct PaymentProfile {
  std::vector<Rational> payments;  // payments[j-1] = t_j

  const Rational& payment(int action) const { return payments[action - 1]; }

  friend bool operator==(const PaymentProfile&, const PaymentProfile&) = default;
};

void validate(const PaymentProfile& profile, const DaInstance& inst);

struct Outcome {
  std::vector<int> chosen_action;       // per agent, 0..m
  std::vector<Rational> agent_utility;  // always >= 0 (zero action is available)
  Rational principal_payoff;            // sum of rho_j - t_j over chosen actions
};

// The action maximizing t_j - c_{i,j}; ties broken toward the principal
// (largest rho_j - t_j), remaining ties toward the smallest action index.
int best_response(const DaInstance& inst, const PaymentProfile& profile, int agent);

Outcome simulate(const DaInstance& inst, const PaymentProfile& profile);

}  // namespace contractforge
