#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elspl/cost.hpp"

namespace elspl {

/// One linear piece of a period's production cost: setup + unit * x on
/// the quantity interval (B_{l-1}, B_l].
struct PieceCost {
  Money setup = 0;
  Money unit = 0;

  friend bool operator==(const PieceCost&, const PieceCost&) = default;
};

/// Piecewise-linear concave cost over one inventory half-line, anchored
/// at 0 with value 0. slopes has breaks.size()+1 entries; slope i applies
/// between breaks[i-1] and breaks[i] (the last slope extends to infinity).
struct ConcaveCostTable {
  std::vector<Quantity> breaks;
  std::vector<Money> slopes;

  [[nodiscard]] CostValue eval(Quantity magnitude) const;

  friend bool operator==(const ConcaveCostTable&, const ConcaveCostTable&) = default;
};

/// Per-period ending-inventory cost. The linear rates are the default;
/// an optional concave table per half-line overrides the matching rate.
struct InventoryModel {
  Money hold_rate = 0;
  Money backlog_rate = 0;
  std::optional<ConcaveCostTable> hold_table;
  std::optional<ConcaveCostTable> backlog_table;

  friend bool operator==(const InventoryModel&, const InventoryModel&) = default;
};

/// Immutable problem data: horizon, demands, breakpoints (the last one is
/// the per-period capacity), per-period cost pieces and inventory model.
/// All quantities and money amounts are integers. Construction accepts any
/// shape-consistent data; semantic checks live in validate().
class Instance {
 public:
  Instance() = default;
  Instance(int horizon, std::vector<Quantity> demands,
           std::vector<Quantity> breakpoints,
           std::vector<std::vector<PieceCost>> pieces,
           std::vector<InventoryModel> inventory);

  [[nodiscard]] int horizon() const { return horizon_; }
  /// Number of interior breakpoints m (capacity excluded).
  [[nodiscard]] int breakpoint_count() const {
    return static_cast<int>(breakpoints_.size()) - 1;
  }
  /// Number of cost pieces m+1.
  [[nodiscard]] int piece_count() const {
    return static_cast<int>(breakpoints_.size());
  }
  /// B_tau for tau in [0, m]; B_0 = 0.
  [[nodiscard]] Quantity breakpoint(int tau) const {
    return tau == 0 ? 0 : breakpoints_[static_cast<std::size_t>(tau) - 1];
  }
  /// B_{m+1}, the per-period production capacity.
  [[nodiscard]] Quantity capacity() const { return breakpoints_.back(); }

  [[nodiscard]] Quantity demand(int j) const {
    return demands_[static_cast<std::size_t>(j) - 1];
  }

  /// D(i, j) = sum of demands over periods [i, j] clipped to [1, T];
  /// 0 when i > j. Constant time from the prefix table.
  [[nodiscard]] Quantity cumulative_demand(int i, int j) const {
    if (i < 1) i = 1;
    if (j > horizon_) j = horizon_;
    if (i > j) return 0;
    return prefix_[static_cast<std::size_t>(j)] - prefix_[static_cast<std::size_t>(i) - 1];
  }
  [[nodiscard]] Quantity total_demand() const { return cumulative_demand(1, horizon_); }

  /// Index of the piece whose interval (B_{l-1}, B_l] contains x, for
  /// 0 < x <= capacity. Returns 0 for x == 0 and -1 when out of range.
  [[nodiscard]] int piece_for(Quantity x) const {
    if (x == 0) return 0;
    if (x < 0 || x > capacity()) return -1;
    int ell = 1;
    while (x > breakpoints_[static_cast<std::size_t>(ell) - 1]) ++ell;
    return ell;
  }

  [[nodiscard]] Money piece_setup(int j, int ell) const {
    return pieces_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(ell) - 1].setup;
  }
  [[nodiscard]] Money piece_unit(int j, int ell) const {
    return pieces_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(ell) - 1].unit;
  }

  /// P_j(x): 0 at x = 0; setup + unit * x on the containing piece;
  /// INFEASIBLE outside [0, capacity].
  [[nodiscard]] CostValue production_cost(int j, Quantity x) const {
    if (x == 0) return CostValue::zero();
    const int ell = piece_for(x);
    if (ell < 0) return CostValue::infeasible();
    return CostValue(piece_setup(j, ell)) + scaled_cost(piece_unit(j, ell), x);
  }

  /// H_j(I): 0 at I = 0; holding side for I > 0, backlog side for I < 0.
  [[nodiscard]] CostValue inventory_cost(int j, Quantity ending_inventory) const {
    if (ending_inventory == 0) return CostValue::zero();
    const InventoryModel& inv = inventory_[static_cast<std::size_t>(j) - 1];
    if (ending_inventory > 0) {
      if (inv.hold_table) return inv.hold_table->eval(ending_inventory);
      return scaled_cost(inv.hold_rate, ending_inventory);
    }
    if (inv.backlog_table) return inv.backlog_table->eval(-ending_inventory);
    return scaled_cost(inv.backlog_rate, -ending_inventory);
  }

  [[nodiscard]] const std::vector<Quantity>& demands() const { return demands_; }
  [[nodiscard]] const std::vector<Quantity>& breakpoints() const { return breakpoints_; }
  [[nodiscard]] const std::vector<std::vector<PieceCost>>& pieces() const { return pieces_; }
  [[nodiscard]] const std::vector<InventoryModel>& inventory() const { return inventory_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int horizon_ = 0;
  std::vector<Quantity> demands_;
  std::vector<Quantity> breakpoints_;
  std::vector<std::vector<PieceCost>> pieces_;
  std::vector<InventoryModel> inventory_;
  std::vector<Quantity> prefix_;
};

struct Violation {
  enum class Kind { kStructural, kInfeasible };
  Kind kind = Kind::kStructural;
  std::string message;
};

/// Every violated instance invariant, with location in the message.
/// Empty result means the instance is valid and feasible.
std::vector<Violation> validate(const Instance& instance);

[[nodiscard]] bool has_structural_violation(const std::vector<Violation>& vs);

/// Throws std::invalid_argument when the instance has structural
/// violations; capacity infeasibility is not an error here.
void require_structurally_valid(const Instance& instance);

/// A production plan. Inventory levels are derived from the balance
/// equation I_j = I_{j-1} + X_j - d_j with I_0 = 0.
struct Schedule {
  std::vector<Quantity> production;
  CostValue total_cost = CostValue::zero();
};

/// I_0..I_T for a production vector (index j holds I_j).
std::vector<Quantity> inventory_levels(const Instance& instance,
                                       const std::vector<Quantity>& production);

/// Total production + inventory cost of a plan. Throws on shape or
/// boundary violations (wrong length, I_T != 0); per-period quantities
/// outside [0, capacity] yield INFEASIBLE.
CostValue evaluate_schedule(const Instance& instance, const std::vector<Quantity>& production);

}  // namespace elspl
