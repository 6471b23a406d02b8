#pragma once

#include "contractforge/model.hpp"

namespace contractforge {

// Knobs for reproducible random instances. Costs are integers; by default
// rewards are drawn up to max_reward above the largest generated cost so that
// zero-action, interior, and everyone-works optima all occur.
struct RandomIdSpec {
  int n = 2;
  int m = 2;
  unsigned long long seed = 0;
  long long max_base_cost = 9;  // strongest agent's costs drawn from 0..max_base_cost
  long long max_gap_step = 3;   // adjacent-gap increments drawn from 1..max_gap_step
  long long max_reward = 12;    // rewards drawn from 0..(max generated cost + max_reward)
};

// Increasing-differences instance built bottom-up: sample the strongest
// agent's costs, stack strictly increasing positive gaps for each weaker
// agent, then permute agent and action labels. Always passes detect_ordering.
DaInstance gen_random_id(const RandomIdSpec& spec);

// Uniform costs with no imposed structure (may be ID by chance).
DaInstance gen_random_instance(const RandomIdSpec& spec);

// Payments drawn from {0, 1/den, 2/den, ..., max_numerator/den}; a small
// denominator keeps exact utility ties frequent.
PaymentProfile gen_random_profile(int num_actions, unsigned long long seed,
                                  long long max_numerator = 24, long long denominator = 2);

}  // namespace contractforge
