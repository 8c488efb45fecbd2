#include "elspl/baseline.hpp"

#include <stdexcept>

namespace elspl {

CostValue block_optimum(const SolveContext& ctx, int u, int v, BlockChoice* choice) {
  const ArrangementUniverse& universe = ctx.universe;
  CostValue best = CostValue::infeasible();
  BlockChoice pick;
  for (int t = u; t <= v; ++t) {
    for (VectorId n_id = universe.layer_begin(t - u); n_id < universe.layer_end(t - u); ++n_id) {
      for (VectorId N_id = universe.layer_begin(v - t); N_id < universe.layer_end(v - t); ++N_id) {
        const CostValue cand = phi(ctx, u, t, v, n_id, N_id);
        if (cand < best) {
          best = cand;
          pick = BlockChoice{false, t, n_id, N_id};
        }
      }
    }
  }
  // Blocks in which every period produces a breakpoint quantity; phi's
  // scan only reaches these when the balancing quantity lands on a piece
  // boundary, so they are minimized explicitly.
  const Quantity block_demand = universe.demand_between(u, v);
  for (VectorId id = universe.layer_begin(v - u + 1); id < universe.layer_end(v - u + 1); ++id) {
    if (universe.omega(id) != block_demand) continue;
    const CostValue cand = ctx.tables.fbar(u, id);
    if (cand < best) {
      best = cand;
      pick = BlockChoice{true, 0, id, kNoVector};
    }
  }
  if (choice != nullptr && best.is_finite()) *choice = pick;
  return best;
}

CostValue tail_all_breakpoints(const SolveContext& ctx, int u, VectorId* n_out) {
  const ArrangementUniverse& universe = ctx.universe;
  const int T = ctx.instance.horizon();
  const Quantity tail_demand = universe.demand_between(u, T);
  CostValue best = CostValue::infeasible();
  for (VectorId id = universe.layer_begin(T - u + 1); id < universe.layer_end(T - u + 1); ++id) {
    if (universe.omega(id) != tail_demand) continue;
    const CostValue cand = ctx.tables.fbar(u, id);
    if (cand < best) {
      best = cand;
      if (n_out != nullptr) *n_out = id;
    }
  }
  return best;
}

CostValue tail_fractional_last(const SolveContext& ctx, const PsiLedger& psi, int u, int* t_out,
                               VectorId* n_out) {
  const ArrangementUniverse& universe = ctx.universe;
  const int T = ctx.instance.horizon();
  CostValue best = CostValue::infeasible();
  for (int t = u; t <= T; ++t) {
    const Quantity block_demand = universe.demand_between(u, t);
    const CostValue tail = psi.get(t + 1);
    for (VectorId n_id = universe.layer_begin(t - u); n_id < universe.layer_end(t - u); ++n_id) {
      if (universe.omega(n_id) >= block_demand) continue;
      const CostValue cand =
          ctx.tables.fbar(u, n_id) +
          ctx.instance.production_cost(t, block_demand - universe.omega(n_id)) + tail;
      if (cand < best) {
        best = cand;
        if (t_out != nullptr) *t_out = t;
        if (n_out != nullptr) *n_out = n_id;
      }
    }
  }
  return best;
}

CostValue tail_fractional_first(const SolveContext& ctx, const PsiLedger& psi, int u, int* v_out,
                                VectorId* N_out) {
  const ArrangementUniverse& universe = ctx.universe;
  const int T = ctx.instance.horizon();
  CostValue best = CostValue::infeasible();
  for (int v = u + 1; v <= T; ++v) {
    const Quantity block_demand = universe.demand_between(u, v);
    for (VectorId N_id = universe.layer_begin(v - u); N_id < universe.layer_end(v - u); ++N_id) {
      if (universe.omega(N_id) >= block_demand) continue;
      const CostValue cand =
          ctx.instance.production_cost(u, block_demand - universe.omega(N_id)) +
          big_f(ctx, psi, u, N_id);
      if (cand < best) {
        best = cand;
        if (v_out != nullptr) *v_out = v;
        if (N_out != nullptr) *N_out = N_id;
      }
    }
  }
  return best;
}

namespace {

Schedule reconstruct_baseline(const SolveContext& ctx, const std::vector<int>& best_v,
                              const std::vector<std::vector<BlockChoice>>& choices,
                              CostValue objective) {
  const ArrangementUniverse& universe = ctx.universe;
  const int T = ctx.instance.horizon();
  std::vector<Quantity> production(static_cast<std::size_t>(T), 0);
  int u = 1;
  while (u <= T) {
    const int v = best_v[static_cast<std::size_t>(u)];
    if (v < u) throw std::logic_error("reconstruct: missing block trace");
    const BlockChoice& choice = choices[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (choice.all_breakpoints) {
      replay_fbar_block(ctx, u, v, choice.n_id, production);
    } else {
      replay_fbar_block(ctx, u, choice.t - 1, choice.n_id, production);
      production[static_cast<std::size_t>(choice.t) - 1] =
          universe.demand_between(u, v) - universe.omega(choice.n_id) -
          universe.omega(choice.N_id);
      replay_fhat_block(ctx, choice.t + 1, v, choice.N_id, production);
    }
    u = v + 1;
  }

  Schedule schedule;
  schedule.production = std::move(production);
  schedule.total_cost = evaluate_schedule(ctx.instance, schedule.production);
  if (schedule.total_cost != objective) {
    throw std::logic_error("reconstruct: schedule cost does not reproduce the optimum");
  }
  if (max_fractional_periods_per_block(ctx.instance, schedule.production) > 1) {
    throw std::logic_error("reconstruct: more than one fractional period in a block");
  }
  return schedule;
}

}  // namespace

BaselineResult dp1_solve(const Instance& instance) {
  require_structurally_valid(instance);
  const SolveContext ctx(instance);
  const int T = instance.horizon();

  BaselineResult result;
  result.block_cost.assign(static_cast<std::size_t>(T) + 1,
                           std::vector<CostValue>(static_cast<std::size_t>(T) + 1,
                                                  CostValue::infeasible()));
  std::vector<std::vector<BlockChoice>> choices(
      static_cast<std::size_t>(T) + 1,
      std::vector<BlockChoice>(static_cast<std::size_t>(T) + 1));
  for (int u = 1; u <= T; ++u) {
    for (int v = u; v <= T; ++v) {
      result.block_cost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          block_optimum(ctx, u, v,
                        &choices[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    }
  }

  result.psi.assign(static_cast<std::size_t>(T) + 2, CostValue::infeasible());
  result.psi[static_cast<std::size_t>(T) + 1] = CostValue::zero();
  std::vector<int> best_v(static_cast<std::size_t>(T) + 1, -1);
  for (int u = T; u >= 1; --u) {
    CostValue best = CostValue::infeasible();
    for (int v = u; v <= T; ++v) {
      const CostValue cand =
          result.block_cost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] +
          result.psi[static_cast<std::size_t>(v) + 1];
      if (cand < best) {
        best = cand;
        best_v[static_cast<std::size_t>(u)] = v;
      }
    }
    result.psi[static_cast<std::size_t>(u)] = best;
  }

  result.objective = result.psi[1];
  if (result.objective.is_finite()) {
    result.schedule = reconstruct_baseline(ctx, best_v, choices, result.objective);
  }
  return result;
}

}  // namespace elspl
