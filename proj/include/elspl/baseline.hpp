#pragma once

#include <optional>
#include <vector>

#include "elspl/dp_core.hpp"

namespace elspl {

/// How one block [u, v] achieves its optimal cost: either every period
/// produces a breakpoint quantity (arrangement n over the whole block),
/// or a designated period t produces the balancing quantity between the
/// arrangements n (before t) and N (after t).
struct BlockChoice {
  bool all_breakpoints = false;
  int t = 0;
  VectorId n_id = kNoVector;
  VectorId N_id = kNoVector;
};

struct BaselineResult {
  CostValue objective = CostValue::infeasible();
  std::vector<CostValue> psi;                        // Psi_u, indices 1..T+1
  std::vector<std::vector<CostValue>> block_cost;    // psi_{u,v}, [u][v]
  std::optional<Schedule> schedule;
};

/// Optimal cost of one block [u, v] between consecutive regeneration
/// points: minimum of phi over every fractional-period split, plus the
/// all-breakpoints candidate. Records the argmin under the fixed
/// tie-break (smallest t, then n id, then N id; splits before the
/// all-breakpoints candidate on equal cost).
CostValue block_optimum(const SolveContext& ctx, int u, int v, BlockChoice* choice = nullptr);

/// Candidate tail costs for Psi_u used by the fast engine's step that
/// handles blocks without an interior fractional period.
///   tail_all_breakpoints: periods u..T all produce breakpoints.
///   tail_fractional_last: the block's producing period is its last
///     period t, arrangement n fills u..t-1, tail continues at t+1.
///   tail_fractional_first: the producing period is u itself,
///     arrangement N fills u+1..v, tail continues at v+1.
CostValue tail_all_breakpoints(const SolveContext& ctx, int u, VectorId* n_out = nullptr);
CostValue tail_fractional_last(const SolveContext& ctx, const PsiLedger& psi, int u,
                               int* t_out = nullptr, VectorId* n_out = nullptr);
CostValue tail_fractional_first(const SolveContext& ctx, const PsiLedger& psi, int u,
                                int* v_out = nullptr, VectorId* N_out = nullptr);

/// The reference dynamic program: Psi_u = min_v {psi_{u,v} + Psi_{v+1}}
/// over precomputed block costs, with schedule reconstruction.
BaselineResult dp1_solve(const Instance& instance);

}  // namespace elspl
