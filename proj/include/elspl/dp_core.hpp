#pragma once

#include <vector>

#include "elspl/arrangements.hpp"
#include "elspl/cost.hpp"
#include "elspl/instance.hpp"

namespace elspl {

/// Psi_u values with an explicit finalization frontier. The solvers
/// finalize entries from u = T+1 downward; any read below the frontier is
/// an evaluation-order bug and throws.
class PsiLedger {
 public:
  explicit PsiLedger(int horizon)
      : values_(static_cast<std::size_t>(horizon) + 2, CostValue::infeasible()),
        frontier_(horizon + 1) {
    values_.back() = CostValue::zero();  // Psi_{T+1} = 0
  }

  /// Fully finalized ledger from an existing Psi vector (index 1..T+1).
  static PsiLedger from_values(std::vector<CostValue> values);

  [[nodiscard]] CostValue get(int u) const;
  void finalize(int u, CostValue value);
  [[nodiscard]] bool finalized(int u) const { return u >= frontier_; }
  [[nodiscard]] int frontier() const { return frontier_; }
  /// Psi_1..Psi_{T+1}; only meaningful once frontier() == 1.
  [[nodiscard]] const std::vector<CostValue>& values() const { return values_; }

 private:
  std::vector<CostValue> values_;
  int frontier_;
};

/// The two block-cost tables.
///   fbar(u, n): minimal cost of periods u..u+nu(n)-1 when every period
///     produces a breakpoint quantity per arrangement n, entering
///     inventory zero.
///   fhat(j, N): minimal cost of periods j..j+nu(N)-1 under arrangement
///     N with zero inventory at the end of the range.
/// Entries are dense per (period, arrangement id); the id encodes the
/// arrangement size, which pins the other period bound.
class DpTables {
 public:
  DpTables(const Instance& instance, const ArrangementUniverse& universe);

  [[nodiscard]] CostValue fbar(int u, VectorId id) const {
    return fbar_[static_cast<std::size_t>(u)][static_cast<std::size_t>(id)];
  }
  [[nodiscard]] CostValue fhat(int j, VectorId id) const {
    return fhat_[static_cast<std::size_t>(j)][static_cast<std::size_t>(id)];
  }
  /// Cached P_j(B_tau).
  [[nodiscard]] CostValue production_at_breakpoint(int j, int tau) const {
    return pb_[static_cast<std::size_t>(j - 1) * components_ + static_cast<std::size_t>(tau)];
  }

  /// Smallest tau attaining the fbar recurrence minimum at (u, id); used
  /// by schedule reconstruction. id must have nu >= 1 and a finite entry.
  [[nodiscard]] int fbar_argmin(int u, VectorId id) const;
  [[nodiscard]] int fhat_argmin(int j, VectorId id) const;

  [[nodiscard]] std::size_t fbar_entry_count(bool include_boundary_layer) const;
  [[nodiscard]] std::size_t fhat_entry_count(bool include_boundary_layer) const;

 private:
  const Instance* instance_;
  const ArrangementUniverse* universe_;
  int components_;
  std::vector<std::vector<CostValue>> fbar_;  // [u][id], u in [1, T]
  std::vector<std::vector<CostValue>> fhat_;  // [j][id], j in [1, T+1]
  std::vector<CostValue> pb_;
};

/// Everything the solvers share for one instance.
struct SolveContext {
  const Instance& instance;
  ArrangementUniverse universe;
  DpTables tables;

  explicit SolveContext(const Instance& inst)
      : instance(inst), universe(inst), tables(inst, universe) {}
};

/// Block cost with one designated production period t between two
/// consecutive regeneration points: arrangement n covers u..t-1,
/// N covers t+1..v, and period t produces whatever quantity balances
/// the block. Throws when the arrangement sizes do not match (u, t, v).
CostValue phi(const SolveContext& ctx, int u, int t, int v, VectorId n_id, VectorId N_id);

/// F_t(N): inventory cost for t plus the cost of the covered block and
/// the finalized tail, assuming zero inventory at the block end.
CostValue big_f(const SolveContext& ctx, const PsiLedger& psi, int t, VectorId N_id);

/// G_{t,l}(N) = p_{t,l} * Ihat_t(N) + F_t(N): the domination key that
/// ranks completion arrangements within one bordered set.
CostValue big_g(const SolveContext& ctx, const PsiLedger& psi, int t, int ell, VectorId N_id);

/// Replays the fbar recurrence choices for arrangement n over periods
/// [u, i_end], writing the breakpoint quantities into production
/// (1-indexed periods, 0-indexed storage). Smallest-tau tie-break.
void replay_fbar_block(const SolveContext& ctx, int u, int i_end, VectorId n_id,
                       std::vector<Quantity>& production);

/// Same for the fhat recurrence over periods [j_start, v].
void replay_fhat_block(const SolveContext& ctx, int j_start, int v, VectorId N_id,
                       std::vector<Quantity>& production);

/// Largest number of fractional production periods (quantity strictly
/// inside a cost piece, i.e. not one of B_1..B_m or the capacity) in any
/// segment between consecutive zero-inventory points of the plan. At
/// most 1 for any schedule built from block replays.
int max_fractional_periods_per_block(const Instance& instance,
                                     const std::vector<Quantity>& production);

}  // namespace elspl
