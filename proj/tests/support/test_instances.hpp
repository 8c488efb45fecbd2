#pragma once

#include <vector>

#include "elspl/instance.hpp"
#include "elspl/instance_io.hpp"

namespace elspl::testing {

/// The recurring two-piece cost structure used across the suites:
/// piece 1 on (0, 5] with setup 10 / unit 1, piece 2 on (5, 100] with
/// setup 15 / unit 2, holding 1, backlog 2.
inline Instance standard_instance(std::vector<Quantity> demands) {
  const int T = static_cast<int>(demands.size());
  std::vector<std::vector<PieceCost>> pieces(
      static_cast<std::size_t>(T), {PieceCost{10, 1}, PieceCost{15, 2}});
  std::vector<InventoryModel> inventory(static_cast<std::size_t>(T));
  for (auto& inv : inventory) {
    inv.hold_rate = 1;
    inv.backlog_rate = 2;
  }
  return Instance(T, std::move(demands), {5, 100}, std::move(pieces), std::move(inventory));
}

/// Single-piece instance (m = 0) with the given capacity.
inline Instance single_piece_instance(std::vector<Quantity> demands, Quantity capacity,
                                      Money setup, Money unit, Money hold, Money backlog) {
  const int T = static_cast<int>(demands.size());
  std::vector<std::vector<PieceCost>> pieces(static_cast<std::size_t>(T),
                                             {PieceCost{setup, unit}});
  std::vector<InventoryModel> inventory(static_cast<std::size_t>(T));
  for (auto& inv : inventory) {
    inv.hold_rate = hold;
    inv.backlog_rate = backlog;
  }
  return Instance(T, std::move(demands), {capacity}, std::move(pieces), std::move(inventory));
}

/// Deterministic family of small instances for sweep tests; index picks
/// the shape, mixing horizons 1..8 and m in {0, 1, 2}.
inline Instance sweep_instance(std::uint64_t seed, int index, int max_horizon = 8,
                               int max_breakpoints = 2) {
  GeneratorParams params;
  params.seed = seed + static_cast<std::uint64_t>(index) * 1000003ULL;
  params.horizon = 1 + index % max_horizon;
  params.breakpoints = index % (max_breakpoints + 1);
  params.demand_max = 10;
  params.breakpoint_max = 30;
  return generate_instance(params);
}

}  // namespace elspl::testing
