#include "elspl/engine.hpp"

#include <chrono>
#include <sstream>

#include "elspl/baseline.hpp"
#include "elspl/instance_io.hpp"
#include "elspl/oracle.hpp"

namespace elspl {

const char* engine_name(Engine engine) {
  switch (engine) {
    case Engine::kFast: return "fast";
    case Engine::kBaseline: return "baseline";
    case Engine::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<Engine> engine_from_name(const std::string& name) {
  if (name == "fast") return Engine::kFast;
  if (name == "baseline") return Engine::kBaseline;
  if (name == "oracle") return Engine::kOracle;
  return std::nullopt;
}

SolveResult run_engine(const Instance& instance, Engine engine, std::uint64_t oracle_budget) {
  SolveResult result;
  result.engine = engine;
  result.digest = instance_digest(instance);
  const auto start = std::chrono::steady_clock::now();
  switch (engine) {
    case Engine::kFast: {
      FastResult fast = solve_fast(instance);
      result.cost = fast.objective;
      result.schedule = std::move(fast.schedule);
      result.psi = std::move(fast.psi);
      result.counters = std::move(fast.counters);
      break;
    }
    case Engine::kBaseline: {
      BaselineResult baseline = dp1_solve(instance);
      result.cost = baseline.objective;
      result.schedule = std::move(baseline.schedule);
      result.psi = std::move(baseline.psi);
      break;
    }
    case Engine::kOracle: {
      OracleResult oracle = oracle_solve(instance, oracle_budget);
      result.cost = oracle.objective;
      result.schedule = std::move(oracle.schedule);
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

namespace {

std::string cost_text(CostValue cost) {
  return cost.is_finite() ? std::to_string(cost.amount()) : std::string("infeasible");
}

std::string production_text(const Schedule& schedule) {
  std::ostringstream out;
  out << "[";
  for (std::size_t j = 0; j < schedule.production.size(); ++j) {
    if (j > 0) out << ", ";
    out << schedule.production[j];
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string format_solve_result(const SolveResult& result) {
  std::ostringstream out;
  out << "engine: " << engine_name(result.engine) << "\n";
  out << "instance: " << result.digest << "\n";
  out << "cost: " << cost_text(result.cost) << "\n";
  if (result.schedule) {
    out << "production: " << production_text(*result.schedule) << "\n";
  }
  out << "time_ms: " << result.wall_ms << "\n";
  if (result.counters) {
    const auto& c = *result.counters;
    out << "counter.reborder_passes: " << c.reborder_passes << "\n";
    out << "counter.eval_calls: " << c.eval_calls << "\n";
    out << "counter.hat_inserts: " << c.totals.hat_inserts << "\n";
    out << "counter.hat_removals: " << c.totals.hat_removals << "\n";
    out << "counter.opt_inserts: " << c.totals.opt_inserts << "\n";
    out << "counter.opt_removals: " << c.totals.opt_removals << "\n";
  }
  return out.str();
}

void compare_runs(CheckReport& report) {
  report.costs_match = true;
  report.psi_match = true;
  for (std::size_t i = 1; i < report.runs.size(); ++i) {
    if (report.runs[i].cost != report.runs[0].cost) report.costs_match = false;
  }
  const SolveResult* fast = nullptr;
  const SolveResult* baseline = nullptr;
  for (const auto& run : report.runs) {
    if (run.engine == Engine::kFast) fast = &run;
    if (run.engine == Engine::kBaseline) baseline = &run;
  }
  if (fast != nullptr && baseline != nullptr) {
    if (fast->psi.size() != baseline->psi.size()) {
      report.psi_match = false;
    } else {
      for (std::size_t u = 1; u < fast->psi.size(); ++u) {
        if (fast->psi[u] != baseline->psi[u]) report.psi_match = false;
      }
    }
  }
}

CheckReport run_check(const Instance& instance, std::uint64_t oracle_budget) {
  CheckReport report;
  report.runs.push_back(run_engine(instance, Engine::kFast, oracle_budget));
  report.runs.push_back(run_engine(instance, Engine::kBaseline, oracle_budget));
  if (oracle_transition_count(instance) <= oracle_budget) {
    report.runs.push_back(run_engine(instance, Engine::kOracle, oracle_budget));
  } else {
    report.oracle_skipped = true;
    report.note = "oracle skipped: transition count above budget";
  }
  compare_runs(report);
  return report;
}

std::string format_check_report(const CheckReport& report) {
  std::ostringstream out;
  if (!report.runs.empty()) {
    out << "instance: " << report.runs.front().digest << "\n";
  }
  for (const auto& run : report.runs) {
    out << "cost." << engine_name(run.engine) << ": " << cost_text(run.cost) << "\n";
  }
  if (report.oracle_skipped) {
    out << "oracle: skipped (budget); 2-engine comparison\n";
  }
  out << "psi_match: " << (report.psi_match ? "yes" : "no") << "\n";
  if (report.agree()) {
    out << "agreement: " << report.runs.size() << " engines agree\n";
  } else {
    out << "agreement: MISMATCH\n";
  }
  return out.str();
}

}  // namespace elspl
