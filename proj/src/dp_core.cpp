#include "elspl/dp_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace elspl {

PsiLedger PsiLedger::from_values(std::vector<CostValue> values) {
  PsiLedger ledger(static_cast<int>(values.size()) - 2);
  ledger.values_ = std::move(values);
  ledger.frontier_ = 1;
  return ledger;
}

CostValue PsiLedger::get(int u) const {
  if (u < frontier_) {
    throw std::logic_error("PsiLedger: read of unfinalized Psi_" + std::to_string(u));
  }
  return values_[static_cast<std::size_t>(u)];
}

void PsiLedger::finalize(int u, CostValue value) {
  if (u != frontier_ - 1) {
    throw std::logic_error("PsiLedger: finalization out of order at Psi_" + std::to_string(u));
  }
  values_[static_cast<std::size_t>(u)] = value;
  frontier_ = u;
}

DpTables::DpTables(const Instance& instance, const ArrangementUniverse& universe)
    : instance_(&instance), universe_(&universe), components_(universe.components()) {
  const int T = instance.horizon();

  pb_.resize(static_cast<std::size_t>(T) * components_);
  for (int j = 1; j <= T; ++j) {
    for (int tau = 0; tau < components_; ++tau) {
      pb_[static_cast<std::size_t>(j - 1) * components_ + static_cast<std::size_t>(tau)] =
          instance.production_cost(j, universe.breakpoint_weight(tau));
    }
  }

  // fbar[u] covers arrangements with nu <= T-u+1; entry order follows id
  // order, so every recurrence read hits an already-built smaller layer.
  fbar_.resize(static_cast<std::size_t>(T) + 1);
  for (int u = 1; u <= T; ++u) {
    auto& row = fbar_[static_cast<std::size_t>(u)];
    row.assign(static_cast<std::size_t>(universe.prefix_size(T - u + 1)), CostValue::infeasible());
    row[0] = CostValue::zero();
    for (VectorId id = 1; id < static_cast<VectorId>(row.size()); ++id) {
      const int i = u + universe.nu(id) - 1;
      const CostValue holding =
          instance.inventory_cost(i, universe.omega(id) - universe.demand_between(u, i));
      CostValue best = CostValue::infeasible();
      for (int tau = 0; tau < components_; ++tau) {
        const VectorId pred = universe.sub(id, tau);
        if (pred == kNoVector) continue;
        best = min_cost(best, row[static_cast<std::size_t>(pred)] +
                                  production_at_breakpoint(i, tau) + holding);
      }
      row[static_cast<std::size_t>(id)] = best;
    }
  }

  // fhat[j] reads fhat[j+1]; build from the far end.
  fhat_.resize(static_cast<std::size_t>(T) + 2);
  fhat_[static_cast<std::size_t>(T) + 1].assign(1, CostValue::zero());
  for (int j = T; j >= 1; --j) {
    auto& row = fhat_[static_cast<std::size_t>(j)];
    const auto& next = fhat_[static_cast<std::size_t>(j) + 1];
    row.assign(static_cast<std::size_t>(universe.prefix_size(T - j + 1)), CostValue::infeasible());
    row[0] = CostValue::zero();
    for (VectorId id = 1; id < static_cast<VectorId>(row.size()); ++id) {
      const int v = j + universe.nu(id) - 1;
      CostValue best = CostValue::infeasible();
      for (int tau = 0; tau < components_; ++tau) {
        const VectorId rest = universe.sub(id, tau);
        if (rest == kNoVector || rest >= static_cast<VectorId>(next.size())) continue;
        const CostValue holding = instance.inventory_cost(
            j, universe.demand_between(j + 1, v) - universe.omega(rest));
        best = min_cost(best, next[static_cast<std::size_t>(rest)] +
                                  production_at_breakpoint(j, tau) + holding);
      }
      row[static_cast<std::size_t>(id)] = best;
    }
  }
}

int DpTables::fbar_argmin(int u, VectorId id) const {
  const ArrangementUniverse& universe = *universe_;
  const int i = u + universe.nu(id) - 1;
  const CostValue holding =
      instance_->inventory_cost(i, universe.omega(id) - universe.demand_between(u, i));
  const CostValue target = fbar(u, id);
  for (int tau = 0; tau < components_; ++tau) {
    const VectorId pred = universe.sub(id, tau);
    if (pred == kNoVector) continue;
    if (fbar(u, pred) + production_at_breakpoint(i, tau) + holding == target) return tau;
  }
  throw std::logic_error("fbar_argmin: no producing choice reproduces the table value");
}

int DpTables::fhat_argmin(int j, VectorId id) const {
  const ArrangementUniverse& universe = *universe_;
  const int v = j + universe.nu(id) - 1;
  const CostValue target = fhat(j, id);
  for (int tau = 0; tau < components_; ++tau) {
    const VectorId rest = universe.sub(id, tau);
    if (rest == kNoVector) continue;
    const CostValue holding =
        instance_->inventory_cost(j, universe.demand_between(j + 1, v) - universe.omega(rest));
    if (fhat(j + 1, rest) + production_at_breakpoint(j, tau) + holding == target) return tau;
  }
  throw std::logic_error("fhat_argmin: no producing choice reproduces the table value");
}

std::size_t DpTables::fbar_entry_count(bool include_boundary_layer) const {
  std::size_t count = 0;
  for (std::size_t u = 1; u < fbar_.size(); ++u) {
    count += fbar_[u].size() - (include_boundary_layer ? 0 : 1);
  }
  return count;
}

std::size_t DpTables::fhat_entry_count(bool include_boundary_layer) const {
  std::size_t count = 0;
  for (std::size_t j = 1; j < fhat_.size() - 1; ++j) {  // j = T+1 is pure boundary
    count += fhat_[j].size() - (include_boundary_layer ? 0 : 1);
  }
  return count;
}

CostValue phi(const SolveContext& ctx, int u, int t, int v, VectorId n_id, VectorId N_id) {
  const ArrangementUniverse& universe = ctx.universe;
  if (!(1 <= u && u <= t && t <= v && v <= ctx.instance.horizon())) {
    throw std::invalid_argument("phi: period indices out of order");
  }
  if (universe.nu(n_id) != t - u || universe.nu(N_id) != v - t) {
    throw std::invalid_argument("phi: arrangement sizes do not match the period split");
  }
  const Quantity fractional =
      universe.demand_between(u, v) - universe.omega(n_id) - universe.omega(N_id);
  return ctx.tables.fbar(u, n_id) + ctx.instance.production_cost(t, fractional) +
         ctx.instance.inventory_cost(t, universe.demand_between(t + 1, v) - universe.omega(N_id)) +
         ctx.tables.fhat(t + 1, N_id);
}

CostValue big_f(const SolveContext& ctx, const PsiLedger& psi, int t, VectorId N_id) {
  const ArrangementUniverse& universe = ctx.universe;
  const int block_end = t + universe.nu(N_id);
  return ctx.instance.inventory_cost(t, universe.ihat(t, N_id)) +
         ctx.tables.fhat(t + 1, N_id) + psi.get(block_end + 1);
}

CostValue big_g(const SolveContext& ctx, const PsiLedger& psi, int t, int ell, VectorId N_id) {
  return scaled_cost(ctx.instance.piece_unit(t, ell), ctx.universe.ihat(t, N_id)) +
         big_f(ctx, psi, t, N_id);
}

void replay_fbar_block(const SolveContext& ctx, int u, int i_end, VectorId n_id,
                       std::vector<Quantity>& production) {
  VectorId cur = n_id;
  for (int i = i_end; i >= u; --i) {
    const int tau = ctx.tables.fbar_argmin(u, cur);
    production[static_cast<std::size_t>(i) - 1] = ctx.universe.breakpoint_weight(tau);
    cur = ctx.universe.sub(cur, tau);
  }
  if (cur != 0) throw std::logic_error("replay_fbar_block: arrangement not exhausted");
}

void replay_fhat_block(const SolveContext& ctx, int j_start, int v, VectorId N_id,
                       std::vector<Quantity>& production) {
  VectorId cur = N_id;
  for (int j = j_start; j <= v; ++j) {
    const int tau = ctx.tables.fhat_argmin(j, cur);
    production[static_cast<std::size_t>(j) - 1] = ctx.universe.breakpoint_weight(tau);
    cur = ctx.universe.sub(cur, tau);
  }
  if (cur != 0) throw std::logic_error("replay_fhat_block: arrangement not exhausted");
}

int max_fractional_periods_per_block(const Instance& instance,
                                     const std::vector<Quantity>& production) {
  const auto levels = inventory_levels(instance, production);
  int worst = 0;
  int in_segment = 0;
  for (int j = 1; j <= instance.horizon(); ++j) {
    const Quantity x = production[static_cast<std::size_t>(j) - 1];
    if (x > 0) {
      // Stationary levels are the piece endpoints: B_1..B_m and the
      // capacity. Anything strictly inside a piece is fractional.
      bool stationary = x == instance.capacity();
      for (int tau = 1; tau <= instance.breakpoint_count(); ++tau) {
        if (x == instance.breakpoint(tau)) stationary = true;
      }
      if (!stationary) ++in_segment;
    }
    if (levels[static_cast<std::size_t>(j)] == 0) {
      worst = std::max(worst, in_segment);
      in_segment = 0;
    }
  }
  return std::max(worst, in_segment);
}

}  // namespace elspl
