#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "elspl/instance.hpp"

namespace elspl {

/// The state budget would be exceeded; never silently truncated.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  CostValue objective = CostValue::infeasible();
  std::optional<Schedule> schedule;
  std::uint64_t transitions = 0;
};

/// Work estimate for the inventory-level dynamic program: states times
/// production choices per state.
std::uint64_t oracle_transition_count(const Instance& instance);

/// Pseudo-polynomial certification engine: exact optimum by a forward DP
/// over ending-inventory levels I_j in [-D(1,j), D(j+1,T)], trying every
/// production quantity in [0, capacity]. Throws OracleBudgetError when
/// the transition count exceeds the budget.
OracleResult oracle_solve(const Instance& instance,
                          std::uint64_t transition_budget = 100'000'000);

/// Brute force over all production tuples; the oracle's own oracle.
/// Guarded to T <= 4 and capacity <= 20.
CostValue enumerate_solve(const Instance& instance);

}  // namespace elspl
