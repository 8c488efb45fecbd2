#include "doctest.h"

#include "elspl/instance.hpp"
#include "support/test_instances.hpp"

using namespace elspl;
using elspl::testing::standard_instance;

namespace {

bool mentions(const std::vector<Violation>& vs, const std::string& needle) {
  for (const auto& v : vs) {
    if (v.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate flags duplicate breakpoints") {
  Instance inst(1, {3}, {5, 5, 100}, {{PieceCost{1, 1}, PieceCost{1, 1}, PieceCost{1, 1}}},
                {InventoryModel{}});
  const auto vs = validate(inst);
  CHECK(mentions(vs, "not strictly increasing"));
}

TEST_CASE("validate flags negative demand with its period") {
  Instance inst = standard_instance({1, 2, -1});
  const auto vs = validate(inst);
  CHECK(mentions(vs, "negative demand at period 3"));
}

TEST_CASE("validate accepts a well-formed instance") {
  CHECK(validate(standard_instance({3})).empty());
}

TEST_CASE("validate reports capacity infeasibility as its own kind") {
  Instance inst = testing::single_piece_instance({9, 9}, 5, 1, 1, 1, 1);
  const auto vs = validate(inst);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == Violation::Kind::kInfeasible);
  CHECK_FALSE(has_structural_violation(vs));
}

TEST_CASE("production cost basics") {
  const Instance inst = standard_instance({3});
  CHECK(inst.production_cost(1, 0) == CostValue::zero());
  CHECK(inst.production_cost(1, inst.capacity() + 1).is_infeasible());
  CHECK(inst.production_cost(1, -1).is_infeasible());
  CHECK(inst.production_cost(1, 3) == CostValue(13));
  // Boundary quantities belong to the lower piece.
  CHECK(inst.production_cost(1, 5) == CostValue(15));
  CHECK(inst.production_cost(1, 6) == CostValue(15 + 12));
}

TEST_CASE("production cost is affine inside each piece") {
  const Instance inst = standard_instance({3, 4, 1});
  for (int j = 1; j <= inst.horizon(); ++j) {
    for (int ell = 1; ell <= inst.piece_count(); ++ell) {
      const Quantity lo = inst.breakpoint(ell - 1);
      const Quantity hi = ell <= inst.breakpoint_count() ? inst.breakpoint(ell) : inst.capacity();
      if (hi - lo < 3) continue;
      const Quantity a = lo + 1;
      const Quantity b = lo + 2;
      const Money slope = inst.production_cost(j, b).amount() - inst.production_cost(j, a).amount();
      CHECK(slope == inst.piece_unit(j, ell));
    }
  }
}

TEST_CASE("inventory cost basics") {
  const Instance inst = standard_instance({3});
  CHECK(inst.inventory_cost(1, 0) == CostValue::zero());
  CHECK(inst.inventory_cost(1, 4) == CostValue(4));
  CHECK(inst.inventory_cost(1, -3) == CostValue(6));
}

TEST_CASE("concave inventory table evaluates piecewise") {
  InventoryModel inv;
  inv.hold_table = ConcaveCostTable{{5, 10}, {4, 3, 2}};
  inv.backlog_rate = 7;
  Instance inst(1, {0}, {100}, {{PieceCost{0, 0}}}, {inv});
  CHECK(inst.inventory_cost(1, 3) == CostValue(12));
  CHECK(inst.inventory_cost(1, 5) == CostValue(20));
  CHECK(inst.inventory_cost(1, 7) == CostValue(20 + 6));
  CHECK(inst.inventory_cost(1, 12) == CostValue(20 + 15 + 4));
  CHECK(inst.inventory_cost(1, -2) == CostValue(14));
  CHECK(validate(inst).empty());
}

TEST_CASE("validate rejects non-concave tables") {
  InventoryModel inv;
  inv.hold_table = ConcaveCostTable{{5}, {2, 3}};  // slope grows away from 0
  Instance inst(1, {0}, {100}, {{PieceCost{0, 0}}}, {inv});
  CHECK(mentions(validate(inst), "not concave"));
}

TEST_CASE("cumulative demand") {
  const Instance inst = standard_instance({3, 4});
  CHECK(inst.cumulative_demand(2, 1) == 0);
  CHECK(inst.cumulative_demand(1, 2) == 7);
  CHECK(inst.cumulative_demand(2, 2) == 4);
  // Out-of-range periods contribute nothing.
  CHECK(inst.cumulative_demand(-3, 10) == 7);
}

TEST_CASE("cumulative demand splits additively") {
  const Instance inst = testing::sweep_instance(7, 5);
  const int T = inst.horizon();
  for (int i = 1; i <= T; ++i) {
    for (int j = i; j < T; ++j) {
      for (int k = j + 1; k <= T; ++k) {
        CHECK(inst.cumulative_demand(i, j) + inst.cumulative_demand(j + 1, k) ==
              inst.cumulative_demand(i, k));
      }
    }
  }
}

TEST_CASE("evaluate_schedule") {
  SUBCASE("all-zero plan for zero demand") {
    const Instance inst = standard_instance({0, 0, 0});
    CHECK(evaluate_schedule(inst, {0, 0, 0}) == CostValue::zero());
  }
  SUBCASE("single period") {
    const Instance inst = standard_instance({3});
    CHECK(evaluate_schedule(inst, {3}) == CostValue(13));
  }
  SUBCASE("front-loaded two periods carries holding cost") {
    const Instance inst = standard_instance({3, 4});
    // P_1(7) = 15 + 2*7 = 29 plus one period holding 4 units.
    CHECK(evaluate_schedule(inst, {7, 0}) == CostValue(33));
  }
  SUBCASE("quantities beyond capacity are infeasible") {
    const Instance inst = testing::single_piece_instance({6, 0}, 5, 1, 1, 1, 1);
    CHECK(evaluate_schedule(inst, {6, 0}).is_infeasible());
  }
  SUBCASE("unbalanced plans are rejected") {
    const Instance inst = standard_instance({3, 4});
    CHECK_THROWS_AS((void)evaluate_schedule(inst, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)evaluate_schedule(inst, {7}), std::invalid_argument);
  }
}

TEST_CASE("cost value algebra") {
  const CostValue inf = CostValue::infeasible();
  CHECK((inf + CostValue(3)).is_infeasible());
  CHECK(inf > CostValue(1'000'000'000));
  CHECK(min_cost(CostValue(4), inf) == CostValue(4));
  CHECK(min_cost(CostValue(4), CostValue(2)) == CostValue(2));
  CHECK((CostValue(2) + CostValue(3)) == CostValue(5));
}
