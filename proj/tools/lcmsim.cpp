// Batch front end: run scenarios into trace files, check problem
// predicates against traces, sweep simulator refinement suites, render
// trajectory plots.
//
// Exit codes: 0 holds / all pass, 1 fails, 2 undecided at horizon,
// 3 usage or input error, 4 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lcmsim/adversaries.hpp"
#include "lcmsim/batch.hpp"
#include "lcmsim/equiv.hpp"
#include "lcmsim/plot.hpp"
#include "lcmsim/problems.hpp"
#include "lcmsim/registry.hpp"
#include "lcmsim/scenario.hpp"
#include "lcmsim/trace_io.hpp"

using namespace lcmsim;

namespace {

constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

int cmd_run(const std::string& scenario_path, const std::string& out_path) {
  Scenario sc = load_scenario(scenario_path);
  Trace trace = run_scenario(sc);
  std::string text = serialize_trace(trace);
  if (out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  std::cerr << "trace: " << trace.events.size() << " events, " << epoch_count(trace)
            << " epochs, horizon " << trace.horizon().str() << "\n";
  return 0;
}

int cmd_check(const std::string& trace_path, const std::string& predicate, const std::string& eps,
              int steps) {
  Trace trace = load_trace(trace_path);
  PredicateReport report = check_predicate(predicate, trace, Rational::parse(eps), steps);
  std::cout << predicate << ": " << report.str() << "\n";
  return verdict_exit_code(report.verdict);
}

struct SuiteEntry {
  const char* alg;
  int k;
};

int cmd_equiv(const std::string& sim_id, const std::string& alg_id, const std::string& sched_kind,
              int seeds, int turns, bool parallel) {
  SimulatorKind kind;
  if (sim_id == "sim.collapse")
    kind = SimulatorKind::Collapse;
  else if (sim_id == "sim.handshake")
    kind = SimulatorKind::Handshake;
  else if (sim_id == "sim.a")
    kind = SimulatorKind::SimA;
  else
    throw std::invalid_argument("unknown simulator id: " + sim_id);

  Algorithm inner = make_algorithm(alg_id, nlohmann::json::object());
  PerRobot<Point> init{{Point{Rational(0), Rational(0)}, Point{Rational(7), Rational(4)}}};

  auto schedule_for = [&](int seed) -> Schedule {
    if (sched_kind == "rsynch") {
      Rng rng(static_cast<std::uint64_t>(seed));
      int prefix = static_cast<int>(rng.below(4));
      RobotId first = rng.coin() ? RobotId::A : RobotId::B;
      return gen_rsynch(prefix, turns, first);
    }
    if (sched_kind == "fsynch") return gen_fsynch(turns);
    if (sched_kind == "asynch")
      return gen_asynch(static_cast<std::uint64_t>(seed), turns, Atomicity::NONE);
    if (sched_kind == "asynch-lc")
      return gen_asynch(static_cast<std::uint64_t>(seed), turns, Atomicity::LC);
    throw std::invalid_argument("unknown schedule kind: " + sched_kind);
  };
  bool require_lcm = sched_kind == "asynch-lc";

  auto outcomes = batch::map_indexed(
      seeds,
      [&](int seed) {
        return check_refinement(kind, inner, RobotModel::FSTA, schedule_for(seed + 1), init,
                                require_lcm);
      },
      parallel);

  int failures = 0;
  double max_overhead = 0;
  int max_colors = 0;
  for (int i = 0; i < seeds; ++i) {
    const EquivOutcome& o = outcomes[i];
    if (!o.legal) {
      ++failures;
      std::cout << "seed " << i + 1 << ": FAIL " << o.failure << "\n";
      continue;
    }
    if (o.abstract_epochs > 0)
      max_overhead = std::max(max_overhead, double(o.sim_epochs) / double(o.abstract_epochs));
    max_colors = std::max(max_colors, o.colors_used);
  }
  std::cout << "equiv " << sim_id << " x " << alg_id << " over " << seeds << " " << sched_kind
            << " seeds: " << (seeds - failures) << "/" << seeds << " legal, max epoch overhead "
            << max_overhead << ", max colors " << max_colors << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_plot(const std::string& trace_path, const std::string& out_path, bool squares) {
  Trace trace = load_trace(trace_path);
  save_svg(trace, out_path, squares);
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-robot look-compute-move simulation and verification engine"};
  app.require_subcommand(1);

  std::string scenario_path, trace_path, out_path = "-", predicate;
  std::string eps = "1/1000";
  int steps = 5;

  auto* run_cmd = app.add_subcommand("run", "execute a scenario into a trace file");
  run_cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--out", out_path, "output trace path ('-' for stdout)");

  auto* check_cmd = app.add_subcommand("check", "evaluate a problem predicate on a trace");
  check_cmd->add_option("--trace", trace_path, "trace file")->required();
  check_cmd->add_option("--predicate", predicate, "dmsd|rdv1|am|rdam|sm|mcv|sro|cge")->required();
  check_cmd->add_option("--eps", eps, "convergence tolerance for mcv (rational)");
  check_cmd->add_option("--steps", steps, "step horizon for cge");

  std::string sim_id, alg_id, sched_kind = "rsynch";
  int seeds = 50, turns = 18;
  bool serial = false;
  auto* equiv_cmd = app.add_subcommand("equiv", "refinement-equivalence sweep for a simulator");
  equiv_cmd->add_option("--sim", sim_id, "sim.collapse|sim.handshake|sim.a")->required();
  equiv_cmd->add_option("--alg", alg_id, "inner algorithm id")->required();
  equiv_cmd->add_option("--sched", sched_kind, "rsynch|fsynch|asynch|asynch-lc");
  equiv_cmd->add_option("--seeds", seeds, "number of seeded schedules");
  equiv_cmd->add_option("--turns", turns, "schedule length (rounds or cycles per robot)");
  equiv_cmd->add_flag("--serial", serial, "disable the parallel sweep");

  bool squares = false;
  auto* plot_cmd = app.add_subcommand("plot", "render a trace as an SVG");
  plot_cmd->add_option("--trace", trace_path, "trace file")->required();
  plot_cmd->add_option("--out", out_path, "output SVG path")->required();
  plot_cmd->add_flag("--squares", squares, "draw the square frames of consecutive stops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(scenario_path, out_path);
    if (check_cmd->parsed()) return cmd_check(trace_path, predicate, eps, steps);
    if (equiv_cmd->parsed()) return cmd_equiv(sim_id, alg_id, sched_kind, seeds, turns, !serial);
    if (plot_cmd->parsed()) return cmd_plot(trace_path, out_path, squares);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
