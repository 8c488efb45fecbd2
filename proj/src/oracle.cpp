#include "elspl/oracle.hpp"

#include <vector>

namespace elspl {

namespace {

struct StateSpace {
  // Inventory for period j lives in [lo[j], hi[j]]; overproduction past
  // the remaining demand or backlog past the served demand is never
  // useful given the zero boundary conditions.
  std::vector<Quantity> lo;
  std::vector<Quantity> hi;

  explicit StateSpace(const Instance& inst) {
    const int T = inst.horizon();
    lo.resize(static_cast<std::size_t>(T) + 1);
    hi.resize(static_cast<std::size_t>(T) + 1);
    for (int j = 0; j <= T; ++j) {
      lo[static_cast<std::size_t>(j)] = -inst.cumulative_demand(1, j);
      hi[static_cast<std::size_t>(j)] = inst.cumulative_demand(j + 1, T);
    }
    lo[0] = hi[0] = 0;
    lo[static_cast<std::size_t>(T)] = hi[static_cast<std::size_t>(T)] = 0;
  }

  [[nodiscard]] std::size_t size(int j) const {
    return static_cast<std::size_t>(hi[static_cast<std::size_t>(j)] -
                                    lo[static_cast<std::size_t>(j)] + 1);
  }
};

}  // namespace

std::uint64_t oracle_transition_count(const Instance& instance) {
  const StateSpace space(instance);
  const std::uint64_t choices = static_cast<std::uint64_t>(instance.capacity()) + 1;
  std::uint64_t total = 0;
  for (int j = 1; j <= instance.horizon(); ++j) {
    total += static_cast<std::uint64_t>(space.size(j)) * choices;
  }
  return total;
}

OracleResult oracle_solve(const Instance& instance, std::uint64_t transition_budget) {
  require_structurally_valid(instance);
  const std::uint64_t transitions = oracle_transition_count(instance);
  if (transitions > transition_budget) {
    throw OracleBudgetError("oracle out of budget: " + std::to_string(transitions) +
                            " transitions exceed " + std::to_string(transition_budget));
  }

  const int T = instance.horizon();
  const StateSpace space(instance);
  std::vector<std::vector<CostValue>> value(static_cast<std::size_t>(T) + 1);
  std::vector<std::vector<Quantity>> pick(static_cast<std::size_t>(T) + 1);
  value[0].assign(space.size(0), CostValue::zero());  // I_0 = 0 only

  for (int j = 1; j <= T; ++j) {
    value[static_cast<std::size_t>(j)].assign(space.size(j), CostValue::infeasible());
    pick[static_cast<std::size_t>(j)].assign(space.size(j), -1);
    const Quantity lo = space.lo[static_cast<std::size_t>(j)];
    const Quantity plo = space.lo[static_cast<std::size_t>(j) - 1];
    const Quantity phi_level = space.hi[static_cast<std::size_t>(j) - 1];
    for (Quantity inv = lo; inv <= space.hi[static_cast<std::size_t>(j)]; ++inv) {
      const CostValue holding = instance.inventory_cost(j, inv);
      CostValue best = CostValue::infeasible();
      Quantity best_x = -1;
      for (Quantity x = 0; x <= instance.capacity(); ++x) {
        const Quantity prev = inv - x + instance.demand(j);
        if (prev < plo || prev > phi_level) continue;
        const CostValue prior =
            value[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(prev - plo)];
        if (prior.is_infeasible()) continue;
        const CostValue cand = prior + instance.production_cost(j, x) + holding;
        if (cand < best) {
          best = cand;
          best_x = x;
        }
      }
      value[static_cast<std::size_t>(j)][static_cast<std::size_t>(inv - lo)] = best;
      pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(inv - lo)] = best_x;
    }
  }

  OracleResult result;
  result.transitions = transitions;
  result.objective = value[static_cast<std::size_t>(T)][0];
  if (result.objective.is_finite()) {
    std::vector<Quantity> production(static_cast<std::size_t>(T), 0);
    Quantity inv = 0;
    for (int j = T; j >= 1; --j) {
      const Quantity lo_j = space.lo[static_cast<std::size_t>(j)];
      const Quantity x =
          pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(inv - lo_j)];
      production[static_cast<std::size_t>(j) - 1] = x;
      inv = inv - x + instance.demand(j);
    }
    Schedule schedule;
    schedule.production = std::move(production);
    schedule.total_cost = evaluate_schedule(instance, schedule.production);
    if (schedule.total_cost != result.objective) {
      throw std::logic_error("oracle: predecessor walk does not reproduce the optimum");
    }
    result.schedule = std::move(schedule);
  }
  return result;
}

CostValue enumerate_solve(const Instance& instance) {
  require_structurally_valid(instance);
  if (instance.horizon() > 4 || instance.capacity() > 20) {
    throw std::invalid_argument("enumerate_solve: instance above the brute-force size guard");
  }
  const int T = instance.horizon();
  std::vector<Quantity> production(static_cast<std::size_t>(T), 0);
  CostValue best = CostValue::infeasible();

  // Depth-first product scan over production tuples with I_T = 0.
  const auto recurse = [&](auto&& self, int j, Quantity inventory) -> void {
    if (j > T) {
      if (inventory == 0) best = min_cost(best, evaluate_schedule(instance, production));
      return;
    }
    for (Quantity x = 0; x <= instance.capacity(); ++x) {
      production[static_cast<std::size_t>(j) - 1] = x;
      self(self, j + 1, inventory + x - instance.demand(j));
    }
  };
  recurse(recurse, 1, 0);
  return best;
}

}  // namespace elspl
