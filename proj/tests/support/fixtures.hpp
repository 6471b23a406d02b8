#pragma once

#include <initializer_list>
#include <vector>

#include "contractforge/hardness.hpp"
#include "contractforge/model.hpp"

namespace fixtures {

using contractforge::DaInstance;
using contractforge::PaymentProfile;
using contractforge::Rational;

// Two agents, two actions: rewards (8, 10), costs (5, 9) and (4, 2).
// Optimal payments (5, 3) for payoff 10; agent restrictions give 3 and 8.
inline DaInstance example1() {
  DaInstance inst;
  inst.rewards = {8, 10};
  inst.costs = {{5, 9}, {4, 2}};
  return inst;
}

inline DaInstance restrict_to_agent(const DaInstance& inst, int agent) {
  DaInstance out;
  out.rewards = inst.rewards;
  out.costs = {inst.costs[agent]};
  return out;
}

inline PaymentProfile pay(std::initializer_list<Rational> ts) {
  return PaymentProfile{std::vector<Rational>(ts)};
}

// Four variables, two clauses: (x1 or x2 or not x3) and (x1 or not x2 or x4).
inline contractforge::Nae3SatInstance two_clause_formula() {
  contractforge::Nae3SatInstance f;
  f.num_vars = 4;
  f.clauses = {contractforge::Clause{{{{1, 1}, {2, 1}, {3, 0}}}},
               contractforge::Clause{{{{1, 1}, {2, 0}, {4, 1}}}}};
  return f;
}

}  // namespace fixtures
