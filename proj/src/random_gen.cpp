#include "contractforge/random_gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace contractforge {

namespace {

// Modulo reduction instead of uniform_int_distribution: the distribution's
// algorithm is implementation-defined, and seeds must reproduce across
// toolchains. The slight bias is irrelevant for test-corpus generation.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[draw(rng, 0, i)]);
  }
  return p;
}

void check_sizes(const RandomIdSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw std::invalid_argument("random instance: n, m >= 1 required");
}

}  // namespace

DaInstance gen_random_id(const RandomIdSpec& spec) {
  check_sizes(spec);
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  const int m = spec.m;

  // rows[k] = costs of the k-th weakest agent in reindexed action coordinates.
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(m));
  long long max_cost = 0;
  for (int l = 0; l < m; ++l) {
    rows[n - 1][l] = draw(rng, 0, spec.max_base_cost);
  }
  for (int k = n - 2; k >= 0; --k) {
    long long gap = 0;
    for (int l = 0; l < m; ++l) {
      gap += draw(rng, 1, spec.max_gap_step);  // strictly increasing across l, strictly positive
      rows[k][l] = rows[k + 1][l] + gap;
    }
  }
  for (const auto& row : rows) {
    for (long long c : row) max_cost = std::max(max_cost, c);
  }

  const std::vector<int> agent_label = random_permutation(rng, n);
  const std::vector<int> action_label = random_permutation(rng, m);

  DaInstance inst;
  inst.rewards.resize(m);
  for (int j = 0; j < m; ++j) inst.rewards[j] = draw(rng, 0, max_cost + spec.max_reward);
  inst.costs.assign(n, std::vector<Rational>(m));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < m; ++l) {
      inst.costs[agent_label[k]][action_label[l]] = rows[k][l];
    }
  }
  return inst;
}

DaInstance gen_random_instance(const RandomIdSpec& spec) {
  check_sizes(spec);
  std::mt19937_64 rng(spec.seed);
  const long long cost_hi = spec.max_base_cost + static_cast<long long>(spec.n) * spec.max_gap_step;

  DaInstance inst;
  inst.costs.assign(spec.n, std::vector<Rational>(spec.m));
  for (auto& row : inst.costs) {
    for (auto& c : row) c = draw(rng, 0, cost_hi);
  }
  inst.rewards.resize(spec.m);
  for (auto& r : inst.rewards) r = draw(rng, 0, cost_hi + spec.max_reward);
  return inst;
}

PaymentProfile gen_random_profile(int num_actions, unsigned long long seed,
                                  long long max_numerator, long long denominator) {
  std::mt19937_64 rng(seed);
  PaymentProfile profile;
  profile.payments.resize(num_actions);
  for (auto& t : profile.payments) t = Rational(draw(rng, 0, max_numerator), denominator);
  return profile;
}

}  // namespace contractforge
