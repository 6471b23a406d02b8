#pragma once

#include <array>
#include <string>
#include <vector>

#include "contractforge/model.hpp"

namespace contractforge {

struct Literal {
  int var = 0;       // 1-based variable index
  int polarity = 1;  // 1 for x_i, 0 for its negation
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::array<Literal, 3> literals;
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Nae3SatInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const Nae3SatInstance&, const Nae3SatInstance&) = default;
};

// Throws InvalidFormula on out-of-range variables, bad polarity bits, or a
// variable repeated inside a clause.
void validate(const Nae3SatInstance& formula);

// "p nae3sat <vars> <clauses>" header, one clause per line as three signed
// integers, optionally 0-terminated; lines starting with 'c' are comments.
// Throws InvalidFormula on malformed input.
Nae3SatInstance parse_nae3sat(const std::string& text);
std::string serialize_nae3sat(const Nae3SatInstance& formula);

// True iff every clause has at least one True and one False literal.
bool check_nae(const Nae3SatInstance& formula, const std::vector<bool>& assignment);

// The three T-agent literals with cost 1 on clause action k (1..6), in
// clause-literal position order. Row k keeps or flips each literal's
// polarity; the six rows realize exactly the six not-all-equal truth
// patterns of the clause's literals.
std::array<Literal, 3> table_row(const Clause& clause, int k);

struct HardnessParams {
  Rational delta;
  Rational rho1;
  Rational rho2;
};

// rho2 - rho1 > 2, delta > 3(rho2 - rho1 - 1), and
// rho1 - delta > m((2n-3)(rho2 - rho1) + n*delta + 4).
bool params_satisfy_constraints(const HardnessParams& params, int n, int m);

struct HardnessBundle {
  Nae3SatInstance formula;
  DaInstance instance;
  Rational r;  // a payoff of exactly r is reachable iff the formula is NAE-satisfiable
  HardnessParams params;
  std::vector<std::string> agent_names;   // by 0-based agent index
  std::vector<std::string> action_names;  // action j (1-based) at position j-1
};

// Agent layout: A_1..A_n, then T_{i,j}^b ordered by (i, j, b), then V_{j,k}
// by (j, k). Action layout: variable_i^b by (i, b), then clause_{j,k} by
// (j, k). All of i, j, k are 1-based; returned agent indices are 0-based and
// action indices 1-based, matching DaInstance.
int agent_index_a(const Nae3SatInstance& formula, int i);
int agent_index_t(const Nae3SatInstance& formula, int i, int j, int b);
int agent_index_v(const Nae3SatInstance& formula, int j, int k);
int action_index_variable(const Nae3SatInstance& formula, int i, int b);
int action_index_clause(const Nae3SatInstance& formula, int j, int k);

// The decision-hardness construction: delta = 7, rho1 = 13mn + 8,
// rho2 = 13mn + 11; A_i pays delta on its two variable actions, T_{i,j}^b is
// free on variable_i^b, V_{j,k} is free on clause_{j,k}, the cost table puts
// cost 1 on three T-agents per clause action, and every unspecified cost is
// the action's reward plus 1.
HardnessBundle generate_mac(const Nae3SatInstance& formula);

// Payments realizing payoff exactly r under an NAE-satisfying assignment:
// variable actions pay 0 when their literal is True and delta otherwise;
// clause actions pay 1 exactly when all three of their cost-1 literals are
// True (one row per clause). Throws NotNaeSatisfying otherwise.
PaymentProfile witness_payments(const HardnessBundle& bundle, const std::vector<bool>& assignment);

}  // namespace contractforge
