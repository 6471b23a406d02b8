#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contractforge/errors.hpp"
#include "contractforge/hardness.hpp"
#include "support/fixtures.hpp"

using namespace contractforge;
using fixtures::two_clause_formula;

namespace {

std::vector<bool> bits(unsigned mask, int n) {
  std::vector<bool> out(n);
  for (int i = 0; i < n; ++i) out[i] = (mask >> i) & 1u;
  return out;
}

Nae3SatInstance random_formula(std::mt19937_64& rng) {
  Nae3SatInstance f;
  f.num_vars = 3 + static_cast<int>(rng() % 3);
  const int m = 1 + static_cast<int>(rng() % 3);
  for (int j = 0; j < m; ++j) {
    int v1 = 1 + static_cast<int>(rng() % f.num_vars);
    int v2 = v1;
    while (v2 == v1) v2 = 1 + static_cast<int>(rng() % f.num_vars);
    int v3 = v1;
    while (v3 == v1 || v3 == v2) v3 = 1 + static_cast<int>(rng() % f.num_vars);
    f.clauses.push_back(Clause{{{{v1, static_cast<int>(rng() % 2)},
                                 {v2, static_cast<int>(rng() % 2)},
                                 {v3, static_cast<int>(rng() % 2)}}}});
  }
  return f;
}

}  // namespace

TEST_CASE("formula validation and parsing") {
  CHECK_NOTHROW(validate(two_clause_formula()));

  Nae3SatInstance repeated;
  repeated.num_vars = 3;
  repeated.clauses = {Clause{{{{1, 1}, {1, 0}, {2, 1}}}}};
  CHECK_THROWS_AS(validate(repeated), InvalidFormula);

  Nae3SatInstance out_of_range;
  out_of_range.num_vars = 2;
  out_of_range.clauses = {Clause{{{{1, 1}, {2, 1}, {3, 1}}}}};
  CHECK_THROWS_AS(validate(out_of_range), InvalidFormula);

  SUBCASE("dimacs-like round trip") {
    Nae3SatInstance f = two_clause_formula();
    CHECK(parse_nae3sat(serialize_nae3sat(f)) == f);
    CHECK(parse_nae3sat("c a comment\np nae3sat 4 2\n1 2 -3 0\n1 -2 4 0\n") == f);
    CHECK(parse_nae3sat("p nae3sat 4 2\n1 2 -3\n1 -2 4\n") == f);  // terminator optional
  }

  SUBCASE("malformed inputs") {
    CHECK_THROWS_AS(parse_nae3sat(""), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("p cnf 4 2\n1 2 -3 0\n1 -2 4 0\n"), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("1 2 -3 0\np nae3sat 4 1\n"), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("p nae3sat 4 2\n1 2 -3 0\n"), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("p nae3sat 4 1\n1 2 0\n"), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("p nae3sat 4 1\n1 2 -3 5\n"), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("p nae3sat 4 1\n1 1 -3 0\n"), InvalidFormula);
    CHECK_THROWS_AS(parse_nae3sat("p nae3sat 2 1\n1 2 -3 0\n"), InvalidFormula);
  }
}

TEST_CASE("not-all-equal evaluation") {
  Nae3SatInstance f = two_clause_formula();
  // Clause 1 literals under x = (T,T,T,*): (T, T, F) has both values.
  CHECK(check_nae(f, {true, true, true, true}));
  CHECK(check_nae(f, {true, false, true, false}));
  // x = (T,T,F,F) makes clause 1 read (T, T, T): all equal.
  CHECK(!check_nae(f, {true, true, false, false}));
  CHECK(!check_nae(f, {false, false, true, false}));
  CHECK_THROWS_AS(check_nae(f, {true, true}), std::invalid_argument);
}

TEST_CASE("table rows cover the six mixed truth patterns") {
  const Nae3SatInstance formula = two_clause_formula();
  const Clause& clause = formula.clauses[0];  // (1,+) (2,+) (3,-)
  CHECK(table_row(clause, 1) == std::array<Literal, 3>{{{1, 1}, {2, 1}, {3, 1}}});
  CHECK(table_row(clause, 2) == std::array<Literal, 3>{{{1, 1}, {2, 0}, {3, 0}}});
  CHECK(table_row(clause, 3) == std::array<Literal, 3>{{{1, 0}, {2, 1}, {3, 0}}});
  CHECK(table_row(clause, 4) == std::array<Literal, 3>{{{1, 0}, {2, 0}, {3, 0}}});
  CHECK(table_row(clause, 5) == std::array<Literal, 3>{{{1, 0}, {2, 1}, {3, 1}}});
  CHECK(table_row(clause, 6) == std::array<Literal, 3>{{{1, 1}, {2, 0}, {3, 1}}});
  CHECK_THROWS_AS(table_row(clause, 0), std::invalid_argument);
  CHECK_THROWS_AS(table_row(clause, 7), std::invalid_argument);

  // Every mixed truth pattern of the clause's literals turns exactly one row
  // all-True; the constant patterns turn none.
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<bool> assignment(3);
    // Choose variable values so literal p's truth equals bit p of mask.
    for (int p = 0; p < 3; ++p) {
      const Literal& lit = clause.literals[p];
      assignment[lit.var - 1] = ((mask >> p) & 1u) == (lit.polarity == 1 ? 1u : 0u);
    }
    int all_true_rows = 0;
    for (int k = 1; k <= 6; ++k) {
      bool all = true;
      for (const Literal& lit : table_row(clause, k)) {
        if (assignment[lit.var - 1] != (lit.polarity == 1)) all = false;
      }
      all_true_rows += all ? 1 : 0;
    }
    CHECK(all_true_rows == (mask == 0 || mask == 7 ? 0 : 1));
  }
}

TEST_CASE("parameter constraints hold at every desk scale") {
  for (int n = 1; n <= 50; ++n) {
    for (int m = 1; m <= 50; ++m) {
      HardnessParams p{7, Rational(13LL * m * n + 8), Rational(13LL * m * n + 11)};
      CHECK(params_satisfy_constraints(p, n, m));
    }
  }
  CHECK(!params_satisfy_constraints(HardnessParams{7, 8, 115}, 4, 2));
  CHECK(!params_satisfy_constraints(HardnessParams{7, 112, 113}, 4, 2));
}

TEST_CASE("two-clause bundle layout") {
  HardnessBundle bundle = generate_mac(two_clause_formula());
  const DaInstance& inst = bundle.instance;

  CHECK(inst.num_agents() == 32);
  CHECK(inst.num_actions() == 20);
  CHECK(bundle.params.delta == 7);
  CHECK(bundle.params.rho1 == 112);
  CHECK(bundle.params.rho2 == 115);
  CHECK(bundle.r == 3546);
  CHECK(params_satisfy_constraints(bundle.params, 4, 2));

  CHECK(bundle.agent_names[0] == "A_1");
  CHECK(bundle.agent_names[agent_index_t(bundle.formula, 1, 1, 0)] == "T_1,1^0");
  CHECK(bundle.agent_names[agent_index_v(bundle.formula, 2, 6)] == "V_2,6");
  CHECK(bundle.action_names[0] == "variable_1^0");
  CHECK(bundle.action_names[action_index_clause(bundle.formula, 2, 6) - 1] == "clause_2,6");

  for (int i = 1; i <= 4; ++i) {
    for (int b = 0; b < 2; ++b) CHECK(inst.reward(action_index_variable(bundle.formula, i, b)) == 112);
  }
  for (int j = 1; j <= 2; ++j) {
    for (int k = 1; k <= 6; ++k) CHECK(inst.reward(action_index_clause(bundle.formula, j, k)) == 115);
  }

  // Spot costs: A_1 on its variable actions, defaults elsewhere.
  CHECK(inst.cost(0, 1) == 7);
  CHECK(inst.cost(0, 2) == 7);
  CHECK(inst.cost(0, 3) == 113);
  CHECK(inst.cost(0, action_index_clause(bundle.formula, 1, 1)) == 116);
  // T_{1,1}^1 is free on variable_1^1 and pays 1 on clause rows keeping x1.
  const int t111 = agent_index_t(bundle.formula, 1, 1, 1);
  CHECK(inst.cost(t111, 2) == 0);
  CHECK(inst.cost(t111, action_index_clause(bundle.formula, 1, 1)) == 1);
  CHECK(inst.cost(t111, action_index_clause(bundle.formula, 1, 2)) == 1);
  CHECK(inst.cost(t111, action_index_clause(bundle.formula, 1, 6)) == 1);
  CHECK(inst.cost(t111, action_index_clause(bundle.formula, 1, 3)) == 116);
  // V_{1,1} is free on its own action only.
  const int v11 = agent_index_v(bundle.formula, 1, 1);
  CHECK(inst.cost(v11, action_index_clause(bundle.formula, 1, 1)) == 0);
  CHECK(inst.cost(v11, action_index_clause(bundle.formula, 1, 2)) == 116);
}

TEST_CASE("structural counts on random formulas") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Nae3SatInstance f = trial == 0 ? two_clause_formula() : random_formula(rng);
    HardnessBundle bundle = generate_mac(f);
    const DaInstance& inst = bundle.instance;
    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());
    CHECK(inst.num_agents() == n + 2 * n * m + 6 * m);
    CHECK(inst.num_actions() == 2 * n + 6 * m);

    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= 6; ++k) {
        const int action = action_index_clause(f, j, k);
        int free_agents = 0;
        int unit_agents = 0;
        for (int a = 0; a < inst.num_agents(); ++a) {
          if (inst.cost(a, action) == 0) ++free_agents;
          if (inst.cost(a, action) == 1) ++unit_agents;
        }
        CHECK(free_agents == 1);
        CHECK(unit_agents == 3);
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int b = 0; b < 2; ++b) {
          const int agent = agent_index_t(f, i, j, b);
          int zero_cost_actions = 0;
          for (int action = 1; action <= inst.num_actions(); ++action) {
            if (inst.cost(agent, action) == 0) ++zero_cost_actions;
          }
          CHECK(zero_cost_actions == 1);
          CHECK(inst.cost(agent, action_index_variable(f, i, b)) == 0);
        }
      }
    }
  }
}

TEST_CASE("witness payments realize r exactly on the two-clause formula") {
  HardnessBundle bundle = generate_mac(two_clause_formula());

  int satisfying = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<bool> assignment = bits(mask, 4);
    if (!check_nae(bundle.formula, assignment)) {
      CHECK_THROWS_AS(witness_payments(bundle, assignment), NotNaeSatisfying);
      continue;
    }
    ++satisfying;
    PaymentProfile payments = witness_payments(bundle, assignment);
    Outcome outcome = simulate(bundle.instance, payments);
    CHECK(outcome.principal_payoff == bundle.r);
  }
  CHECK(satisfying == 8);
}

TEST_CASE("traced behavior under witness payments") {
  HardnessBundle bundle = generate_mac(two_clause_formula());
  const Nae3SatInstance& f = bundle.formula;
  std::vector<bool> assignment{true, false, true, false};
  REQUIRE(check_nae(f, assignment));
  PaymentProfile payments = witness_payments(bundle, assignment);
  Outcome outcome = simulate(bundle.instance, payments);

  // x1 is True: its true-literal action pays 0, the false one pays delta, and
  // A_1 ties at utility 0 between idling and the paid action; the reward
  // difference sends it to variable_1^0.
  CHECK(payments.payment(action_index_variable(f, 1, 1)) == 0);
  CHECK(payments.payment(action_index_variable(f, 1, 0)) == 7);
  CHECK(outcome.chosen_action[agent_index_a(f, 1)] == action_index_variable(f, 1, 0));

  // Clause 1 literals read (T, F, F) here: row 6 is the paying one.
  for (int k = 1; k <= 6; ++k) {
    CHECK(payments.payment(action_index_clause(f, 1, k)) == (k == 6 ? 1 : 0));
  }
  // The true-literal T-agents of clause 1 all join the paying row.
  for (const Literal& lit : table_row(f.clauses[0], 6)) {
    CHECK(outcome.chosen_action[agent_index_t(f, lit.var, 1, lit.polarity)] ==
          action_index_clause(f, 1, 6));
  }
  // A false-literal T-agent collects delta on its variable action instead.
  CHECK(outcome.chosen_action[agent_index_t(f, 2, 1, 1)] == action_index_variable(f, 2, 1));
  // V-agents sit on their own actions whether or not those pay.
  CHECK(outcome.chosen_action[agent_index_v(f, 1, 1)] == action_index_clause(f, 1, 1));
  CHECK(outcome.chosen_action[agent_index_v(f, 1, 6)] == action_index_clause(f, 1, 6));
}

TEST_CASE("witness exactness on random formulas") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Nae3SatInstance f = random_formula(rng);
    HardnessBundle bundle = generate_mac(f);
    int satisfying = 0;
    for (unsigned mask = 0; mask < (1u << f.num_vars); ++mask) {
      std::vector<bool> assignment = bits(mask, f.num_vars);
      if (!check_nae(f, assignment)) continue;
      ++satisfying;
      Outcome outcome = simulate(bundle.instance, witness_payments(bundle, assignment));
      CHECK(outcome.principal_payoff == bundle.r);
    }
    INFO("formula with ", f.num_vars, " vars, ", f.clauses.size(), " clauses: ", satisfying,
         " NAE assignments");
  }
}
