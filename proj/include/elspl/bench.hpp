#pragma once

#include <string>
#include <vector>

#include "elspl/engine.hpp"
#include "elspl/instance_io.hpp"

namespace elspl {

struct BenchRow {
  std::string engine;
  int horizon = 0;
  int breakpoints = 0;
  int repetition = 0;
  double time_ms = 0.0;
  CostValue cost = CostValue::infeasible();
  SetCounters counters;
  bool budget_marker = false;
};

struct BenchParams {
  int breakpoints = 1;
  std::vector<int> horizons{10, 14, 20, 28, 40};
  int repetitions = 3;
  std::uint64_t seed = 12345;
  double budget_seconds = 540.0;
  std::vector<Engine> engines{Engine::kFast, Engine::kBaseline};
  Quantity demand_max = 10;
  Quantity breakpoint_max = 30;
};

/// Times each engine on one generated instance per horizon. When the
/// wall-clock budget runs out the CSV ends with a marker row.
std::vector<BenchRow> run_bench(const BenchParams& params);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace elspl
