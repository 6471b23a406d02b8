#include "contractforge/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

#include "contractforge/errors.hpp"

namespace contractforge {

namespace {

// Number of assignments (m+1)^n, capped: returns budget + 1 on overflow past it.
long long assignment_count_capped(int n, int m, long long budget) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / (m + 1)) return budget + 1;
    total *= m + 1;
  }
  return total;
}

struct Best {
  bool found = false;
  Rational value;
  long long index = 0;  // enumeration index of the assignment, for deterministic merges
  Assignment assignment;
  PaymentProfile profile;
  Outcome outcome;
};

// Scans `count` assignments starting at enumeration index `start`
// (lexicographic order over target vectors, first agent most significant).
Best scan_range(const DaInstance& inst, long long start, long long count) {
  const int n = inst.num_agents();
  const int m = inst.num_actions();
  Assignment a;
  a.target.resize(n);
  long long rest = start;
  for (int i = n - 1; i >= 0; --i) {
    a.target[i] = static_cast<int>(rest % (m + 1));
    rest /= m + 1;
  }
  Best best;
  for (long long step = 0; step < count; ++step) {
    if (step > 0) {  // odometer increment
      for (int i = n - 1; i >= 0; --i) {
        if (++a.target[i] <= m) break;
        a.target[i] = 0;
      }
    }
    auto profile = minimal_payments(inst, a);
    if (profile) {
      Outcome out = simulate(inst, *profile);
      if (!best.found || out.principal_payoff > best.value) {
        best.found = true;
        best.value = out.principal_payoff;
        best.index = start + step;
        best.assignment = a;
        best.profile = std::move(*profile);
        best.outcome = std::move(out);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<PaymentProfile> minimal_payments(const DaInstance& inst, const Assignment& assignment) {
  const int n = inst.num_agents();
  const int m = inst.num_actions();
  if (static_cast<int>(assignment.target.size()) != n) {
    throw std::invalid_argument("assignment: target count != number of agents");
  }

  // Collect assigned actions and the base bounds t_a >= c_{i,a}.
  std::vector<int> slot(m + 1, -1);
  std::vector<int> actions;
  for (int i = 0; i < n; ++i) {
    const int a = assignment.target[i];
    if (a < 0 || a > m) throw std::invalid_argument("assignment: target out of range");
    if (a >= 1 && slot[a] < 0) {
      slot[a] = static_cast<int>(actions.size());
      actions.push_back(a);
    }
  }
  std::vector<Rational> t(actions.size());
  for (int i = 0; i < n; ++i) {
    const int a = assignment.target[i];
    if (a == 0) continue;
    t[slot[a]] = std::max(t[slot[a]], inst.cost(i, a));
  }

  // Longest-path relaxation of t_a >= t_b + (c_{i,a} - c_{i,b}) for each agent
  // i targeting a and each assigned b. Values only grow, so the least fixed
  // point is reached within |assigned| - 1 rounds unless there is a strictly
  // positive cycle, which one extra round exposes.
  const int rounds = static_cast<int>(actions.size());
  for (int round = 0; round < rounds; ++round) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      const int a = assignment.target[i];
      if (a == 0) continue;
      for (int b : actions) {
        if (b == a) continue;
        Rational bound = t[slot[b]] + inst.cost(i, a) - inst.cost(i, b);
        if (bound > t[slot[a]]) {
          t[slot[a]] = std::move(bound);
          changed = true;
        }
      }
    }
    if (!changed) break;
    if (round == rounds - 1) return std::nullopt;  // still growing: positive cycle
  }

  PaymentProfile profile;
  profile.payments.assign(m, Rational(0));
  for (int b : actions) profile.payments[b - 1] = t[slot[b]];
  return profile;
}

OracleResult oracle_solve(const DaInstance& inst, long long budget, int jobs) {
  validate(inst);
  const int n = inst.num_agents();
  const int m = inst.num_actions();
  const long long total = assignment_count_capped(n, m, budget);
  if (total > budget) {
    throw BudgetExceeded("oracle: (m+1)^n exceeds budget " + std::to_string(budget));
  }

  jobs = std::max(1, jobs);
  if (static_cast<long long>(jobs) > total) jobs = static_cast<int>(total);

  std::vector<Best> bests(jobs);
  if (jobs == 1) {
    bests[0] = scan_range(inst, 0, total);
  } else {
    std::vector<std::thread> workers;
    const long long base = total / jobs;
    const long long rem = total % jobs;
    long long start = 0;
    for (int w = 0; w < jobs; ++w) {
      const long long count = base + (w < rem ? 1 : 0);
      workers.emplace_back([&inst, &bests, w, start, count] { bests[w] = scan_range(inst, start, count); });
      start += count;
    }
    for (auto& th : workers) th.join();
  }

  // Deterministic merge: best value, then smallest enumeration index.
  const Best* winner = nullptr;
  for (const auto& b : bests) {
    if (!b.found) continue;
    if (winner == nullptr || b.value > winner->value ||
        (b.value == winner->value && b.index < winner->index)) {
      winner = &b;
    }
  }
  // The all-zero assignment is always feasible, so a winner exists.
  return OracleResult{winner->profile, winner->outcome, winner->value, winner->assignment};
}

bool decide_mac(const DaInstance& inst, const Rational& r, long long budget, int jobs) {
  return oracle_solve(inst, budget, jobs).value >= r;
}

}  // namespace contractforge
