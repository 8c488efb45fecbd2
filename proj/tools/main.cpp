#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "elspl/bench.hpp"
#include "elspl/engine.hpp"
#include "elspl/instance_io.hpp"
#include "elspl/oracle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitOracleBudget = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw elspl::ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Parse and validate, reporting through exit codes: 2 for syntax/shape,
/// 3 for structural violations. Capacity infeasibility is left to the
/// solver (exit 4 there).
elspl::Instance load_instance(const std::string& path) {
  const elspl::Instance instance = elspl::parse_instance(read_file(path));
  const auto violations = elspl::validate(instance);
  if (elspl::has_structural_violation(violations)) {
    std::ostringstream msg;
    msg << "invalid instance " << path << ":";
    for (const auto& v : violations) msg << "\n  " << v.message;
    throw std::domain_error(msg.str());
  }
  return instance;
}

int cmd_solve(const std::string& path, const std::string& engine_name, std::uint64_t budget,
              const std::string& out_path) {
  const auto engine = elspl::engine_from_name(engine_name);
  if (!engine) {
    std::cerr << "unknown engine: " << engine_name << "\n";
    return 1;
  }
  const elspl::Instance instance = load_instance(path);
  const elspl::SolveResult result = elspl::run_engine(instance, *engine, budget);
  std::cout << elspl::format_solve_result(result);
  if (result.cost.is_infeasible()) {
    std::cerr << "instance is infeasible\n";
    return kExitInfeasible;
  }
  if (!out_path.empty() && result.schedule) {
    std::ofstream out(out_path, std::ios::binary);
    out << elspl::serialize_schedule(*result.schedule);
  }
  return 0;
}

int cmd_check(const std::string& path, std::uint64_t budget) {
  const elspl::Instance instance = load_instance(path);
  const elspl::CheckReport report = elspl::run_check(instance, budget);
  std::cout << elspl::format_check_report(report);
  if (!report.runs.empty() && report.runs.front().cost.is_infeasible() && report.agree()) {
    std::cerr << "instance is infeasible\n";
    return kExitInfeasible;
  }
  return report.agree() ? 0 : 1;
}

int cmd_generate(const elspl::GeneratorParams& params, const std::string& out_path) {
  const elspl::Instance instance = elspl::generate_instance(params);
  const std::string text = elspl::serialize_instance(instance);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

int cmd_bench(const elspl::BenchParams& params) {
  const auto rows = elspl::run_bench(params);
  std::cout << elspl::bench_csv(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for single-item lot sizing with piecewise-linear production costs"};
  app.require_subcommand(1);

  std::string path;
  std::string engine = "fast";
  std::string out_path;
  std::uint64_t budget = 100'000'000;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("path", path, "instance file")->required();
  solve->add_option("--engine", engine, "fast | baseline | oracle");
  solve->add_option("--budget-states", budget, "oracle transition budget");
  solve->add_option("--out", out_path, "write the schedule as JSON");

  auto* check = app.add_subcommand("check", "run all engines and compare exactly");
  check->add_option("path", path, "instance file")->required();
  check->add_option("--budget-states", budget, "oracle transition budget");

  elspl::GeneratorParams gen;
  auto* generate = app.add_subcommand("generate", "emit a random instance");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--horizon", gen.horizon, "number of periods");
  generate->add_option("--breakpoints", gen.breakpoints, "interior breakpoint count m");
  generate->add_option("--demand-max", gen.demand_max, "maximum per-period demand");
  generate->add_option("--breakpoint-max", gen.breakpoint_max, "maximum interior breakpoint");
  generate->add_option("--setup-max", gen.setup_max, "maximum setup cost");
  generate->add_option("--unit-max", gen.unit_max, "maximum unit cost");
  generate->add_option("--rate-max", gen.rate_max, "maximum inventory rate");
  generate->add_option("--out", out_path, "output file (stdout when omitted)");

  elspl::BenchParams bench;
  std::string engines_flag = "fast,baseline";
  auto* bench_cmd = app.add_subcommand("bench", "timing sweep as CSV");
  bench_cmd->add_option("--m", bench.breakpoints, "interior breakpoint count");
  bench_cmd->add_option("--t-list", bench.horizons, "horizons to sweep")->delimiter(',');
  bench_cmd->add_option("--reps", bench.repetitions, "repetitions per cell");
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--budget-seconds", bench.budget_seconds, "wall-clock budget");
  bench_cmd->add_option("--engines", engines_flag, "comma list of engines");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, engine, budget, out_path);
    if (check->parsed()) return cmd_check(path, budget);
    if (generate->parsed()) return cmd_generate(gen, out_path);
    if (bench_cmd->parsed()) {
      bench.engines.clear();
      std::stringstream names(engines_flag);
      std::string name;
      while (std::getline(names, name, ',')) {
        const auto parsed = elspl::engine_from_name(name);
        if (!parsed) {
          std::cerr << "unknown engine: " << name << "\n";
          return 1;
        }
        bench.engines.push_back(*parsed);
      }
      return cmd_bench(bench);
    }
  } catch (const elspl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const elspl::OracleBudgetError& e) {
    std::cerr << e.what() << "\n";
    return kExitOracleBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
