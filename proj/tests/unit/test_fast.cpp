#include "doctest.h"

#include <algorithm>

#include "elspl/baseline.hpp"
#include "elspl/fast.hpp"
#include "elspl/oracle.hpp"
#include "support/test_instances.hpp"

using namespace elspl;

TEST_CASE("fast solver trivial cases") {
  SUBCASE("single period") {
    const auto result = solve_fast(testing::standard_instance({3}));
    CHECK(result.objective == CostValue(13));
    REQUIRE(result.schedule.has_value());
    CHECK(result.schedule->production == std::vector<Quantity>{3});
  }
  SUBCASE("standard two periods") {
    CHECK(solve_fast(testing::standard_instance({3, 4})).objective == CostValue(27));
  }
  SUBCASE("zero demands") {
    const Instance inst = testing::standard_instance({0, 0, 0, 0});
    const auto result = solve_fast(inst);
    CHECK(result.objective == CostValue::zero());
    REQUIRE(result.schedule.has_value());
    CHECK(evaluate_schedule(inst, result.schedule->production) == CostValue::zero());
  }
  SUBCASE("infeasible capacity") {
    const auto result = solve_fast(testing::single_piece_instance({5, 6}, 5, 1, 1, 1, 1));
    CHECK(result.objective.is_infeasible());
    CHECK_FALSE(result.schedule.has_value());
  }
}

TEST_CASE("fast agrees with baseline and oracle on random instances") {
  FastOptions options;
  options.verify_fronts = true;
  options.verify_structure = true;
  for (int index = 0; index < 150; ++index) {
    const Instance inst = testing::sweep_instance(2024, index);
    const auto fast = solve_fast(inst, options);
    const auto baseline = dp1_solve(inst);
    const auto reference = oracle_solve(inst);
    CAPTURE(index);
    CHECK(fast.objective == baseline.objective);
    CHECK(fast.objective == reference.objective);
    CHECK(fast.front_check_failures == 0);
    CHECK(fast.structure_check_failures == 0);
    // Per-u agreement of the whole Psi vector, infeasible tails included.
    REQUIRE(fast.psi.size() == baseline.psi.size());
    for (std::size_t u = 1; u < fast.psi.size(); ++u) {
      CHECK(fast.psi[u] == baseline.psi[u]);
    }
    if (fast.schedule) {
      CHECK(evaluate_schedule(inst, fast.schedule->production) == fast.objective);
      CHECK(max_fractional_periods_per_block(inst, fast.schedule->production) <= 1);
    }
    CHECK(fast.counters.within_amortized_bounds(inst.breakpoint_count()));
  }
}

TEST_CASE("bordered sets maintain the partition across monotone keys") {
  const Instance inst = testing::sweep_instance(660, 6, 7, 2);
  REQUIRE(inst.horizon() >= 3);
  const SolveContext ctx(inst);
  const PsiLedger psi = PsiLedger::from_values(dp1_solve(inst).psi);
  const auto seq = SortedHorizonSequences::build(ctx.universe);
  const int t = 2;
  const auto& order = seq.tilde_order(t);

  BorderedSets sets(ctx, psi, t, seq.hat_order(t), ctx.universe.border_key(t, order.front()));
  CHECK(sets.verify_structure());

  std::vector<int> previous_membership;
  for (std::int64_t p = 0; p < sets.universe_size(); ++p) {
    previous_membership.push_back(sets.member_set(p));
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto counters_before = sets.counters();
    const std::int64_t key = ctx.universe.border_key(t, order[i]);
    sets.advance_borders(key);
    CHECK(sets.verify_structure());
    if (key == sets.key() && key == ctx.universe.border_key(t, order[i - 1])) {
      // Equal keys move nothing.
      CHECK(sets.counters().hat_inserts == counters_before.hat_inserts);
      CHECK(sets.counters().hat_removals == counters_before.hat_removals);
    }
    for (std::int64_t p = 0; p < sets.universe_size(); ++p) {
      const int now = sets.member_set(p);
      const int before = previous_membership[static_cast<std::size_t>(p)];
      // Vectors only descend: staging -> live sets -> retired.
      if (before != now) {
        CHECK(now < before);
      }
      previous_membership[static_cast<std::size_t>(p)] = now;
    }
  }
}

TEST_CASE("bordered sets reject non-monotone rebordering") {
  const Instance inst = testing::standard_instance({2, 3, 4});
  const SolveContext ctx(inst);
  const PsiLedger psi = PsiLedger::from_values(dp1_solve(inst).psi);
  const auto seq = SortedHorizonSequences::build(ctx.universe);
  BorderedSets sets(ctx, psi, 2, seq.hat_order(2), 100);
  CHECK_THROWS_AS(sets.advance_borders(99), std::logic_error);
}

TEST_CASE("check-and-remove keeps optimality lists as the Pareto staircase") {
  const Instance inst = testing::sweep_instance(881, 5, 6, 1);
  REQUIRE(inst.horizon() >= 3);
  const SolveContext ctx(inst);
  const PsiLedger psi = PsiLedger::from_values(dp1_solve(inst).psi);
  const auto seq = SortedHorizonSequences::build(ctx.universe);
  const int t = 2;
  BorderedSets sets(ctx, psi, t, seq.hat_order(t),
                    ctx.universe.border_key(t, seq.tilde_order(t).front()));
  for (int ell = 1; ell <= inst.piece_count(); ++ell) {
    const auto members = sets.order_list(ell);
    const auto optimal = sets.optimality_list(ell);
    CHECK(optimal.size() <= members.size());
    if (!optimal.empty()) {
      // Front is the minimum over the whole member set.
      const auto front = sets.front(ell);
      REQUIRE(front.has_value());
      for (VectorId member : members) {
        CHECK(front->g <= big_g(ctx, psi, t, ell, member));
      }
    }
  }
}

TEST_CASE("counters stay within the amortized bound per horizon") {
  const Instance inst = testing::sweep_instance(990, 14, 8, 2);
  const auto result = solve_fast(inst);
  CHECK(result.counters.within_amortized_bounds(inst.breakpoint_count()));
  for (const auto& h : result.counters.per_horizon) {
    CHECK(h.sets.opt_removals <= h.sets.opt_inserts);
    CHECK(h.sets.hat_removals <= h.sets.hat_inserts);
  }
}

TEST_CASE("degenerate families solve across engines") {
  SUBCASE("m = 0 classic setup-cost lot sizing") {
    for (int index = 0; index < 30; ++index) {
      const Instance inst = testing::sweep_instance(3030, index, 8, 0);
      REQUIRE(inst.breakpoint_count() == 0);
      const auto fast = solve_fast(inst);
      const auto baseline = dp1_solve(inst);
      const auto reference = oracle_solve(inst);
      CHECK(fast.objective == baseline.objective);
      CHECK(fast.objective == reference.objective);
    }
  }
  SUBCASE("zero-demand instances are free") {
    for (int m = 0; m <= 2; ++m) {
      GeneratorParams params;
      params.seed = 4040 + static_cast<std::uint64_t>(m);
      params.horizon = 5;
      params.breakpoints = m;
      params.demand_max = 0;
      const Instance inst = generate_instance(params);
      CHECK(solve_fast(inst).objective == CostValue::zero());
      CHECK(dp1_solve(inst).objective == CostValue::zero());
      CHECK(oracle_solve(inst).objective == CostValue::zero());
    }
  }
}
