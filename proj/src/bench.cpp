#include "elspl/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace elspl {

std::vector<BenchRow> run_bench(const BenchParams& params) {
  std::vector<BenchRow> rows;
  const auto start = std::chrono::steady_clock::now();
  const auto out_of_budget = [&]() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return elapsed > params.budget_seconds;
  };

  for (int horizon : params.horizons) {
    GeneratorParams gen;
    gen.seed = params.seed + static_cast<std::uint64_t>(horizon);
    gen.horizon = horizon;
    gen.breakpoints = params.breakpoints;
    gen.demand_max = params.demand_max;
    gen.breakpoint_max = params.breakpoint_max;
    Instance instance = generate_instance(gen);
    if (params.uncapacitated) {
      // Timing sweeps use the uncapacitated convention (capacity equal to
      // the total demand) so both engines run at the m-breakpoint
      // arrangement dimension their complexity bounds are stated for.
      auto breakpoints = instance.breakpoints();
      breakpoints.back() = std::max(instance.total_demand(), breakpoints.back());
      instance = Instance(instance.horizon(), instance.demands(), std::move(breakpoints),
                          instance.pieces(), instance.inventory());
    }

    for (Engine engine : params.engines) {
      for (int rep = 0; rep < params.repetitions; ++rep) {
        if (out_of_budget()) {
          BenchRow marker;
          marker.engine = "budget_exceeded";
          marker.horizon = horizon;
          marker.breakpoints = params.breakpoints;
          marker.budget_marker = true;
          rows.push_back(marker);
          return rows;
        }
        const SolveResult run = run_engine(instance, engine);
        BenchRow row;
        row.engine = engine_name(engine);
        row.horizon = horizon;
        row.breakpoints = params.breakpoints;
        row.repetition = rep;
        row.time_ms = run.wall_ms;
        row.cost = run.cost;
        if (run.counters) row.counters = run.counters->totals;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "engine,T,m,rep,time_ms,cost,hat_inserts,hat_removals,opt_inserts,opt_removals\n";
  for (const auto& row : rows) {
    out << row.engine << "," << row.horizon << "," << row.breakpoints << ","
        << row.repetition << "," << row.time_ms << ",";
    if (row.cost.is_finite()) out << row.cost.amount();
    out << "," << row.counters.hat_inserts << "," << row.counters.hat_removals << ","
        << row.counters.opt_inserts << "," << row.counters.opt_removals << "\n";
  }
  return out.str();
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_loglog_slope: need matching series of length >= 2");
  }
  const std::size_t n = x.size();
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    num += dx * (std::log(y[i]) - my);
    den += dx * dx;
  }
  return num / den;
}

}  // namespace elspl
