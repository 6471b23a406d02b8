#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contractforge/dp.hpp"
#include "contractforge/oracle.hpp"
#include "contractforge/random_gen.hpp"

using namespace contractforge;

TEST_CASE("every generated id instance is recognized as such") {
  for (unsigned long long seed = 0; seed < 1000; ++seed) {
    RandomIdSpec spec;
    spec.n = 1 + static_cast<int>(seed % 6);
    spec.m = 1 + static_cast<int>((seed / 6) % 5);
    spec.seed = seed;
    DaInstance inst = gen_random_id(spec);
    CHECK(inst.num_agents() == spec.n);
    CHECK(inst.num_actions() == spec.m);
    CHECK(detect_ordering(inst).has_value());
    for (const auto& row : inst.costs) {
      for (const Rational& c : row) CHECK(c >= 0);
    }
  }
}

TEST_CASE("same seed reproduces the same instance") {
  RandomIdSpec spec;
  spec.n = 4;
  spec.m = 3;
  spec.seed = 2024;
  CHECK(gen_random_id(spec) == gen_random_id(spec));
  CHECK(gen_random_instance(spec) == gen_random_instance(spec));
  CHECK(gen_random_profile(5, 77) == gen_random_profile(5, 77));

  RandomIdSpec other = spec;
  other.seed = 2025;
  CHECK(gen_random_id(spec) != gen_random_id(other));
}

TEST_CASE("dp matches the oracle on generated instances") {
  for (unsigned long long seed = 0; seed < 10; ++seed) {
    RandomIdSpec spec;
    spec.n = 4;
    spec.m = 3;
    spec.seed = 1000 + seed;
    DaInstance inst = gen_random_id(spec);
    auto ordering = detect_ordering(inst);
    REQUIRE(ordering.has_value());
    CHECK(solve_dp(inst, *ordering).value == oracle_solve(inst).value);
  }
}

TEST_CASE("random profiles stay on the coarse nonnegative grid") {
  for (unsigned long long seed = 0; seed < 50; ++seed) {
    PaymentProfile profile = gen_random_profile(4, seed);
    CHECK(profile.payments.size() == 4);
    for (const Rational& t : profile.payments) {
      CHECK(t >= 0);
      CHECK(t <= 12);
      CHECK((t * 2).is_integer());
    }
  }
}
