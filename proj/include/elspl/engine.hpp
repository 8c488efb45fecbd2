#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elspl/fast.hpp"
#include "elspl/instance.hpp"

namespace elspl {

enum class Engine { kFast, kBaseline, kOracle };

[[nodiscard]] const char* engine_name(Engine engine);
std::optional<Engine> engine_from_name(const std::string& name);

/// One engine run over one instance, as reported by the CLI.
struct SolveResult {
  Engine engine = Engine::kFast;
  CostValue cost = CostValue::infeasible();
  std::optional<Schedule> schedule;
  double wall_ms = 0.0;
  std::optional<FastCounters> counters;  // fast engine only
  std::string digest;
  std::vector<CostValue> psi;  // fast and baseline
};

SolveResult run_engine(const Instance& instance, Engine engine,
                       std::uint64_t oracle_budget = 100'000'000);

std::string format_solve_result(const SolveResult& result);

struct CheckReport {
  std::vector<SolveResult> runs;
  bool oracle_skipped = false;
  bool costs_match = true;
  bool psi_match = true;
  std::string note;

  [[nodiscard]] bool agree() const { return costs_match && psi_match; }
};

/// Runs fast and baseline always, the oracle when it fits the budget;
/// compares costs exactly and the per-u Psi vectors between fast and
/// baseline.
CheckReport run_check(const Instance& instance, std::uint64_t oracle_budget = 100'000'000);

/// Comparison core, exposed so a corrupted result can be fed in as a
/// negative control.
void compare_runs(CheckReport& report);

std::string format_check_report(const CheckReport& report);

}  // namespace elspl
