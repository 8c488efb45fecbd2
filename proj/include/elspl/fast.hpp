#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elspl/dp_core.hpp"

namespace elspl {

struct SetCounters {
  std::int64_t hat_inserts = 0;
  std::int64_t hat_removals = 0;
  std::int64_t opt_inserts = 0;
  std::int64_t opt_removals = 0;
};

/// Element movement recorded for one fixed horizon index t.
struct HorizonCounters {
  int t = 0;
  std::int64_t universe_size = 0;  // |Pi-hat'_t|
  SetCounters sets;
};

struct FastCounters {
  std::int64_t reborder_passes = 0;
  std::int64_t eval_calls = 0;
  SetCounters totals;
  std::vector<HorizonCounters> per_horizon;

  /// Amortized accounting: per fixed t, insertions and removals each stay
  /// within (m+1) * |Pi-hat'_t|.
  [[nodiscard]] bool within_amortized_bounds(int breakpoint_count) const;
};

struct FastOptions {
  /// Compare every per-set front against a full scan of the set.
  bool verify_fronts = false;
  /// Re-check the partition/order/staircase invariants after each step.
  bool verify_structure = false;
};

struct FastResult {
  CostValue objective = CostValue::infeasible();
  std::vector<CostValue> psi;  // Psi_u, indices 1..T+1
  std::optional<Schedule> schedule;
  FastCounters counters;
  std::uint64_t sort_touches = 0;
  std::int64_t front_check_failures = 0;
  std::int64_t structure_check_failures = 0;
};

/// The m+1 live candidate sets for one fixed t over the Ihat-sorted
/// sequence hat_order(t). Set l holds the positions whose Ihat lies in
/// (B_{l-1} + key, B_l + key] for the current border key K_t(n);
/// positions above the last border wait in a staging range, positions at
/// or below the first border are retired for good. Every set pairs the
/// Ihat-ordered members with an optimality list holding the surviving
/// members in non-decreasing G order, front = minimizer.
class BorderedSets {
 public:
  BorderedSets(const SolveContext& ctx, const PsiLedger& psi, int t,
               std::span<const VectorId> hat_order, std::int64_t initial_key);

  /// Set maintenance for the next arrangement key. Keys never decrease
  /// along the tilde order (monotonic rebordering); violations throw.
  void advance_borders(std::int64_t new_key);

  struct Front {
    VectorId id;
    CostValue g;
  };
  [[nodiscard]] std::optional<Front> front(int ell) const;

  [[nodiscard]] std::int64_t key() const { return key_; }
  [[nodiscard]] int horizon_index() const { return t_; }
  [[nodiscard]] std::int64_t universe_size() const { return static_cast<std::int64_t>(ids_.size()); }
  [[nodiscard]] const SetCounters& counters() const { return counters_; }

  static constexpr int kRetired = 0;
  [[nodiscard]] int staging_marker() const { return pieces_ + 1; }
  /// Locator: kRetired, a live set index in [1, m+1], or staging_marker().
  [[nodiscard]] int member_set(std::int64_t position) const {
    return member_[static_cast<std::size_t>(position)];
  }
  [[nodiscard]] std::vector<VectorId> order_list(int ell) const;
  [[nodiscard]] std::vector<VectorId> optimality_list(int ell) const;

  /// Partition, ordering and Pareto-staircase invariants; false on any
  /// violation.
  [[nodiscard]] bool verify_structure() const;

 private:
  [[nodiscard]] std::int64_t border(int ell) const;
  void enter_set(std::int32_t pos, int ell);
  void unlink_from_optimality(std::int32_t pos, int ell);

  const SolveContext* ctx_;
  const PsiLedger* psi_;
  int t_;
  int pieces_;
  std::int64_t key_;
  std::vector<VectorId> ids_;
  std::vector<std::int64_t> ival_;
  std::vector<CostValue> g_;
  std::vector<std::int32_t> bound_;  // bound_[l] = first position with Ihat > B_l + key
  std::vector<std::int8_t> member_;
  std::vector<char> in_opt_;
  std::vector<std::int32_t> opt_prev_;
  std::vector<std::int32_t> opt_next_;
  std::vector<std::int32_t> opt_head_;
  std::vector<std::int32_t> opt_tail_;
  SetCounters counters_;
};

/// The main solver: precomputed tables and sorted sequences, then one
/// backward sweep that finalizes Psi_u per horizon start u, maintaining
/// the bordered sets across the arrangement order for each t.
FastResult solve_fast(const Instance& instance, const FastOptions& options = {});

}  // namespace elspl
