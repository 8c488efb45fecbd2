#include "elspl/instance.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace elspl {

CostValue ConcaveCostTable::eval(Quantity magnitude) const {
  CostValue total = CostValue::zero();
  Quantity covered = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const Quantity upper = i < breaks.size() ? breaks[i] : magnitude;
    const Quantity upto = upper < magnitude ? upper : magnitude;
    if (upto > covered) {
      total += scaled_cost(slopes[i], upto - covered);
      covered = upto;
    }
    if (covered == magnitude) break;
  }
  return total;
}

Instance::Instance(int horizon, std::vector<Quantity> demands,
                   std::vector<Quantity> breakpoints,
                   std::vector<std::vector<PieceCost>> pieces,
                   std::vector<InventoryModel> inventory)
    : horizon_(horizon),
      demands_(std::move(demands)),
      breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      inventory_(std::move(inventory)) {
  prefix_.assign(demands_.size() + 1, 0);
  for (std::size_t j = 0; j < demands_.size(); ++j) {
    prefix_[j + 1] = prefix_[j] + demands_[j];
  }
}

namespace {

void check_table(const ConcaveCostTable& table, const std::string& where,
                 std::vector<Violation>& out) {
  if (table.slopes.size() != table.breaks.size() + 1) {
    out.push_back({Violation::Kind::kStructural,
                   where + ": table needs breaks.size()+1 slopes"});
    return;
  }
  for (std::size_t i = 0; i < table.breaks.size(); ++i) {
    if (table.breaks[i] <= 0) {
      out.push_back({Violation::Kind::kStructural,
                     where + ": table breakpoints must be positive"});
    }
    if (i + 1 < table.breaks.size() && table.breaks[i] >= table.breaks[i + 1]) {
      out.push_back({Violation::Kind::kStructural,
                     where + ": table breakpoints not strictly increasing"});
    }
  }
  for (std::size_t i = 0; i < table.slopes.size(); ++i) {
    if (table.slopes[i] < 0) {
      out.push_back({Violation::Kind::kStructural, where + ": negative table slope"});
    }
    if (i + 1 < table.slopes.size() && table.slopes[i] < table.slopes[i + 1]) {
      out.push_back({Violation::Kind::kStructural,
                     where + ": table slopes increase away from 0 (not concave)"});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  const auto structural = [&out](std::string msg) {
    out.push_back({Violation::Kind::kStructural, std::move(msg)});
  };

  const int T = inst.horizon();
  if (T < 1) structural("horizon: must be at least 1");
  if (static_cast<int>(inst.demands().size()) != T) {
    structural("demands: expected " + std::to_string(T) + " entries");
  }
  for (std::size_t j = 0; j < inst.demands().size(); ++j) {
    if (inst.demands()[j] < 0) {
      structural("demands[" + std::to_string(j) + "]: negative demand at period " +
                 std::to_string(j + 1));
    }
  }

  const auto& bps = inst.breakpoints();
  if (bps.empty()) {
    structural("breakpoints: need at least the capacity entry");
  }
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (bps[i] <= 0) {
      structural("breakpoints[" + std::to_string(i) + "]: must be positive");
    }
    if (i + 1 < bps.size() && bps[i] >= bps[i + 1]) {
      structural("breakpoints[" + std::to_string(i) + "]: breakpoints not strictly increasing");
    }
  }

  if (static_cast<int>(inst.pieces().size()) != T) {
    structural("pieces: expected " + std::to_string(T) + " rows");
  }
  for (std::size_t j = 0; j < inst.pieces().size(); ++j) {
    const auto& row = inst.pieces()[j];
    if (row.size() != bps.size()) {
      structural("pieces[" + std::to_string(j) + "]: expected " +
                 std::to_string(bps.size()) + " pieces");
      continue;
    }
    for (std::size_t l = 0; l < row.size(); ++l) {
      const std::string where = "pieces[" + std::to_string(j) + "][" + std::to_string(l) + "]";
      if (row[l].setup < 0) structural(where + ": negative setup");
      if (row[l].unit < 0) structural(where + ": negative unit cost");
    }
  }

  if (static_cast<int>(inst.inventory().size()) != T) {
    structural("inventory: expected " + std::to_string(T) + " records");
  }
  for (std::size_t j = 0; j < inst.inventory().size(); ++j) {
    const auto& inv = inst.inventory()[j];
    const std::string where = "inventory[" + std::to_string(j) + "]";
    if (inv.hold_rate < 0) structural(where + ": negative holding rate");
    if (inv.backlog_rate < 0) structural(where + ": negative backlog rate");
    if (inv.hold_table) check_table(*inv.hold_table, where + ".hold", out);
    if (inv.backlog_table) check_table(*inv.backlog_table, where + ".backlog", out);
  }

  if (out.empty()) {
    const Quantity total_capacity = static_cast<Quantity>(T) * inst.capacity();
    if (total_capacity < inst.total_demand()) {
      out.push_back({Violation::Kind::kInfeasible,
                     "capacity: total capacity " + std::to_string(total_capacity) +
                         " below total demand " + std::to_string(inst.total_demand())});
    }
  }
  return out;
}

bool has_structural_violation(const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    if (v.kind == Violation::Kind::kStructural) return true;
  }
  return false;
}

void require_structurally_valid(const Instance& instance) {
  const auto vs = validate(instance);
  if (!has_structural_violation(vs)) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const auto& v : vs) {
    if (v.kind == Violation::Kind::kStructural) msg << "\n  " << v.message;
  }
  throw std::invalid_argument(msg.str());
}

std::vector<Quantity> inventory_levels(const Instance& instance,
                                       const std::vector<Quantity>& production) {
  std::vector<Quantity> levels(production.size() + 1, 0);
  for (std::size_t j = 0; j < production.size(); ++j) {
    levels[j + 1] = levels[j] + production[j] - instance.demand(static_cast<int>(j) + 1);
  }
  return levels;
}

CostValue evaluate_schedule(const Instance& instance, const std::vector<Quantity>& production) {
  if (static_cast<int>(production.size()) != instance.horizon()) {
    throw std::invalid_argument("schedule: expected " + std::to_string(instance.horizon()) +
                                " production quantities");
  }
  const auto levels = inventory_levels(instance, production);
  if (levels.back() != 0) {
    throw std::invalid_argument("schedule: ending inventory I_T = " +
                                std::to_string(levels.back()) + ", must be 0");
  }
  CostValue total = CostValue::zero();
  for (int j = 1; j <= instance.horizon(); ++j) {
    total += instance.production_cost(j, production[static_cast<std::size_t>(j) - 1]);
    total += instance.inventory_cost(j, levels[static_cast<std::size_t>(j)]);
  }
  return total;
}

}  // namespace elspl
