#include "contractforge/hardness.hpp"

#include <sstream>
#include <stdexcept>

#include "contractforge/errors.hpp"

namespace contractforge {

void validate(const Nae3SatInstance& formula) {
  if (formula.num_vars < 1) throw InvalidFormula("formula: need at least one variable");
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause.literals) {
      if (lit.var < 1 || lit.var > formula.num_vars) {
        throw InvalidFormula("formula: variable index out of range");
      }
      if (lit.polarity != 0 && lit.polarity != 1) {
        throw InvalidFormula("formula: polarity must be 0 or 1");
      }
    }
    if (clause.literals[0].var == clause.literals[1].var ||
        clause.literals[0].var == clause.literals[2].var ||
        clause.literals[1].var == clause.literals[2].var) {
      throw InvalidFormula("formula: variables within a clause must be distinct");
    }
  }
}

Nae3SatInstance parse_nae3sat(const std::string& text) {
  Nae3SatInstance formula;
  bool have_header = false;
  size_t expected_clauses = 0;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;       // blank line
    if (first[0] == 'c') continue;          // comment
    if (first == "p") {
      std::string kind;
      long long vars = 0;
      long long clauses = 0;
      if (have_header || !(tokens >> kind >> vars >> clauses) || kind != "nae3sat" ||
          vars < 1 || clauses < 0) {
        throw InvalidFormula("formula: bad header, expected 'p nae3sat <vars> <clauses>'");
      }
      std::string extra;
      if (tokens >> extra) throw InvalidFormula("formula: trailing tokens after header");
      formula.num_vars = static_cast<int>(vars);
      expected_clauses = static_cast<size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw InvalidFormula("formula: clause before header");

    Clause clause;
    std::istringstream nums(line);
    for (Literal& lit : clause.literals) {
      long long v = 0;
      if (!(nums >> v) || v == 0) throw InvalidFormula("formula: clause needs three nonzero literals");
      lit.var = static_cast<int>(v < 0 ? -v : v);
      lit.polarity = v > 0 ? 1 : 0;
    }
    long long terminator = 0;
    if (nums >> terminator) {
      std::string extra;
      if (terminator != 0 || (nums >> extra)) {
        throw InvalidFormula("formula: clause line has trailing tokens");
      }
    }
    formula.clauses.push_back(clause);
  }

  if (!have_header) throw InvalidFormula("formula: missing header");
  if (formula.clauses.size() != expected_clauses) {
    throw InvalidFormula("formula: clause count does not match the header");
  }
  validate(formula);
  return formula;
}

std::string serialize_nae3sat(const Nae3SatInstance& formula) {
  std::ostringstream out;
  out << "p nae3sat " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause.literals) {
      out << (lit.polarity == 1 ? lit.var : -lit.var) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

namespace {

bool literal_true(const Literal& lit, const std::vector<bool>& assignment) {
  return assignment[lit.var - 1] == (lit.polarity == 1);
}

}  // namespace

bool check_nae(const Nae3SatInstance& formula, const std::vector<bool>& assignment) {
  validate(formula);
  if (static_cast<int>(assignment.size()) != formula.num_vars) {
    throw std::invalid_argument("check_nae: assignment length must equal the variable count");
  }
  for (const Clause& clause : formula.clauses) {
    int trues = 0;
    for (const Literal& lit : clause.literals) trues += literal_true(lit, assignment) ? 1 : 0;
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

std::array<Literal, 3> table_row(const Clause& clause, int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("table_row: k must be in 1..6");
  // Which literal positions appear flipped in row k. Row k's three literals
  // are all True under exactly one not-all-equal truth pattern of the
  // clause's own literals, and the six rows cover all six patterns.
  static constexpr bool kFlip[6][3] = {
      {false, false, true},  // clause_{j,1}
      {false, true, false},  // clause_{j,2}
      {true, false, false},  // clause_{j,3}
      {true, true, false},   // clause_{j,4}
      {true, false, true},   // clause_{j,5}
      {false, true, true},   // clause_{j,6}
  };
  std::array<Literal, 3> row;
  for (int p = 0; p < 3; ++p) {
    const Literal& lit = clause.literals[p];
    row[p] = Literal{lit.var, kFlip[k - 1][p] ? 1 - lit.polarity : lit.polarity};
  }
  return row;
}

bool params_satisfy_constraints(const HardnessParams& params, int n, int m) {
  const Rational gap = params.rho2 - params.rho1;
  if (!(gap > 2)) return false;
  if (!(params.delta > Rational(3) * (gap - 1))) return false;
  const Rational rhs =
      Rational(m) * ((Rational(2 * n - 3)) * gap + Rational(n) * params.delta + 4);
  return params.rho1 - params.delta > rhs;
}

int agent_index_a(const Nae3SatInstance&, int i) { return i - 1; }

int agent_index_t(const Nae3SatInstance& formula, int i, int j, int b) {
  const int m = static_cast<int>(formula.clauses.size());
  return formula.num_vars + ((i - 1) * m + (j - 1)) * 2 + b;
}

int agent_index_v(const Nae3SatInstance& formula, int j, int k) {
  const int m = static_cast<int>(formula.clauses.size());
  return formula.num_vars + 2 * formula.num_vars * m + (j - 1) * 6 + (k - 1);
}

int action_index_variable(const Nae3SatInstance&, int i, int b) { return (i - 1) * 2 + b + 1; }

int action_index_clause(const Nae3SatInstance& formula, int j, int k) {
  return 2 * formula.num_vars + (j - 1) * 6 + k;
}

HardnessBundle generate_mac(const Nae3SatInstance& formula) {
  validate(formula);
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());

  HardnessBundle bundle;
  bundle.formula = formula;
  bundle.params.delta = 7;
  bundle.params.rho1 = Rational(13LL * m * n + 8);
  bundle.params.rho2 = Rational(13LL * m * n + 11);
  const Rational& delta = bundle.params.delta;
  const Rational& rho1 = bundle.params.rho1;
  const Rational& rho2 = bundle.params.rho2;

  const int num_actions = 2 * n + 6 * m;
  const int num_agents = n + 2 * n * m + 6 * m;

  DaInstance& inst = bundle.instance;
  inst.rewards.resize(num_actions);
  bundle.action_names.resize(num_actions);
  for (int i = 1; i <= n; ++i) {
    for (int b = 0; b < 2; ++b) {
      const int action = action_index_variable(formula, i, b);
      inst.rewards[action - 1] = rho1;
      bundle.action_names[action - 1] =
          "variable_" + std::to_string(i) + "^" + std::to_string(b);
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= 6; ++k) {
      const int action = action_index_clause(formula, j, k);
      inst.rewards[action - 1] = rho2;
      bundle.action_names[action - 1] =
          "clause_" + std::to_string(j) + "," + std::to_string(k);
    }
  }

  // Default: every cost strictly above the action's reward, so no optimal
  // profile ever sends an agent there.
  inst.costs.assign(num_agents, std::vector<Rational>(num_actions));
  for (int a = 0; a < num_agents; ++a) {
    for (int action = 1; action <= num_actions; ++action) {
      inst.costs[a][action - 1] = inst.reward(action) + 1;
    }
  }

  bundle.agent_names.resize(num_agents);
  for (int i = 1; i <= n; ++i) {
    const int agent = agent_index_a(formula, i);
    bundle.agent_names[agent] = "A_" + std::to_string(i);
    inst.costs[agent][action_index_variable(formula, i, 0) - 1] = delta;
    inst.costs[agent][action_index_variable(formula, i, 1) - 1] = delta;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (int b = 0; b < 2; ++b) {
        const int agent = agent_index_t(formula, i, j, b);
        bundle.agent_names[agent] = "T_" + std::to_string(i) + "," + std::to_string(j) +
                                    "^" + std::to_string(b);
        inst.costs[agent][action_index_variable(formula, i, b) - 1] = 0;
      }
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= 6; ++k) {
      const int agent = agent_index_v(formula, j, k);
      bundle.agent_names[agent] = "V_" + std::to_string(j) + "," + std::to_string(k);
      inst.costs[agent][action_index_clause(formula, j, k) - 1] = 0;
      for (const Literal& lit : table_row(formula.clauses[j - 1], k)) {
        const int t_agent = agent_index_t(formula, lit.var, j, lit.polarity);
        inst.costs[t_agent][action_index_clause(formula, j, k) - 1] = 1;
      }
    }
  }

  bundle.r = Rational(n) * (rho1 - delta) + Rational(m) * (Rational(6) * rho2 - 1) +
             Rational(m) * (Rational(n) * (rho1 - delta) + Rational(n - 3) * rho1 +
                            Rational(3) * (rho2 - 1));
  return bundle;
}

PaymentProfile witness_payments(const HardnessBundle& bundle, const std::vector<bool>& assignment) {
  const Nae3SatInstance& formula = bundle.formula;
  if (static_cast<int>(assignment.size()) != formula.num_vars) {
    throw std::invalid_argument("witness_payments: assignment length must equal the variable count");
  }
  if (!check_nae(formula, assignment)) {
    throw NotNaeSatisfying("witness_payments: assignment does not NAE-satisfy the formula");
  }

  PaymentProfile profile;
  profile.payments.assign(bundle.instance.num_actions(), Rational(0));
  for (int i = 1; i <= formula.num_vars; ++i) {
    for (int b = 0; b < 2; ++b) {
      const bool lit_true = assignment[i - 1] == (b == 1);
      profile.payments[action_index_variable(formula, i, b) - 1] =
          lit_true ? Rational(0) : bundle.params.delta;
    }
  }
  for (int j = 1; j <= static_cast<int>(formula.clauses.size()); ++j) {
    for (int k = 1; k <= 6; ++k) {
      bool all_true = true;
      for (const Literal& lit : table_row(formula.clauses[j - 1], k)) {
        if (assignment[lit.var - 1] != (lit.polarity == 1)) {
          all_true = false;
          break;
        }
      }
      if (all_true) profile.payments[action_index_clause(formula, j, k) - 1] = 1;
    }
  }
  return profile;
}

}  // namespace contractforge
