#include "doctest.h"

#include "elspl/oracle.hpp"
#include "support/test_instances.hpp"

using namespace elspl;

TEST_CASE("oracle solves the single-period instance") {
  const auto result = oracle_solve(testing::standard_instance({3}));
  CHECK(result.objective == CostValue(13));
  REQUIRE(result.schedule.has_value());
  CHECK(result.schedule->production == std::vector<Quantity>{3});
}

TEST_CASE("oracle on zero demands is free") {
  const auto result = oracle_solve(testing::standard_instance({0, 0, 0, 0}));
  CHECK(result.objective == CostValue::zero());
}

TEST_CASE("oracle certifies the standard two-period instance") {
  const auto result = oracle_solve(testing::standard_instance({3, 4}));
  CHECK(result.objective == CostValue(27));
  // Cross-check by full enumeration of X_1; X_2 is then forced.
  const Instance inst = testing::standard_instance({3, 4});
  CostValue best = CostValue::infeasible();
  for (Quantity x1 = 0; x1 <= 7; ++x1) {
    best = min_cost(best, evaluate_schedule(inst, {x1, 7 - x1}));
  }
  CHECK(best == result.objective);
}

TEST_CASE("oracle respects its transition budget") {
  const Instance inst = testing::standard_instance({3, 4});
  CHECK_THROWS_AS((void)oracle_solve(inst, 10), OracleBudgetError);
}

TEST_CASE("oracle agrees with brute-force enumeration on tiny instances") {
  int solved = 0;
  for (int index = 0; index < 100; ++index) {
    GeneratorParams params;
    params.seed = 300 + static_cast<std::uint64_t>(index);
    params.horizon = 1 + index % 4;
    params.breakpoints = index % 3;
    params.demand_max = 4;
    params.breakpoint_max = 6;
    const Instance inst = generate_instance(params);
    if (inst.capacity() > 20) continue;
    const CostValue brute = enumerate_solve(inst);
    const auto result = oracle_solve(inst);
    CHECK(result.objective == brute);
    if (result.schedule) {
      CHECK(evaluate_schedule(inst, result.schedule->production) == result.objective);
    }
    ++solved;
  }
  CHECK(solved >= 80);
}

TEST_CASE("both report infeasibility under a too-tight capacity") {
  // Structurally fine but total capacity 2*5 < 11.
  Instance inst = testing::single_piece_instance({5, 6}, 5, 1, 1, 1, 1);
  REQUIRE_FALSE(has_structural_violation(validate(inst)));
  CHECK(enumerate_solve(inst).is_infeasible());
  CHECK(oracle_solve(inst).objective.is_infeasible());
}

TEST_CASE("enumerate_solve refuses oversized instances") {
  CHECK_THROWS_AS((void)enumerate_solve(testing::standard_instance({1, 1, 1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("single-period enumeration is forced to the demand") {
  const Instance inst = testing::single_piece_instance({4}, 9, 2, 3, 1, 1);
  CHECK(enumerate_solve(inst) == CostValue(2 + 12));
}

TEST_CASE("oracle pruning matches an unpruned inventory sweep") {
  // Same DP with the crude symmetric range [-D(1,T), D(1,T)] at every
  // period; the pruned bounds must not change the optimum.
  for (int index = 0; index < 12; ++index) {
    GeneratorParams params;
    params.seed = 900 + static_cast<std::uint64_t>(index);
    params.horizon = 1 + index % 4;
    params.breakpoints = index % 2;
    params.demand_max = 5;
    params.breakpoint_max = 8;
    const Instance inst = generate_instance(params);
    const int T = inst.horizon();
    const Quantity total = inst.total_demand();

    std::vector<std::vector<CostValue>> value(
        static_cast<std::size_t>(T) + 1,
        std::vector<CostValue>(static_cast<std::size_t>(2 * total + 1), CostValue::infeasible()));
    value[0][static_cast<std::size_t>(total)] = CostValue::zero();  // inventory 0 at offset total
    for (int j = 1; j <= T; ++j) {
      for (Quantity inv = -total; inv <= total; ++inv) {
        CostValue best = CostValue::infeasible();
        for (Quantity x = 0; x <= inst.capacity(); ++x) {
          const Quantity prev = inv - x + inst.demand(j);
          if (prev < -total || prev > total) continue;
          const CostValue prior =
              value[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(prev + total)];
          best = min_cost(best, prior + inst.production_cost(j, x) + inst.inventory_cost(j, inv));
        }
        value[static_cast<std::size_t>(j)][static_cast<std::size_t>(inv + total)] = best;
      }
    }
    CHECK(value[static_cast<std::size_t>(T)][static_cast<std::size_t>(total)] ==
          oracle_solve(inst).objective);
  }
}
