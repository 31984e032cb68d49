#pragma once

#include "lcmsim/protocols.hpp"

namespace lcmsim {

/// Outcome of one simulator-vs-direct comparison.
struct EquivOutcome {
  bool legal = false;
  std::string failure;      // first mismatch, empty when legal
  int abstract_steps = 0;
  int sim_epochs = 0;
  int abstract_epochs = 0;
  int colors_used = 0;      // distinct composite values in the simulator trace
};

/// Runs the simulator built from `inner` over `sched`, projects the
/// trace back to inner steps, replays the inner algorithm directly
/// under the induced schedule and compares snapshots, decisions and the
/// geometric stop sequence. For SimA the induced schedule must also be
/// Compute-Move atomic (and fully atomic when `require_lcm`); for the
/// handshake it must be a synchronous prefix followed by strict
/// alternation.
EquivOutcome check_refinement(SimulatorKind kind, const Algorithm& inner,
                              RobotModel collapse_target, const Schedule& sched,
                              const PerRobot<Point>& init_positions, bool require_lcm = false);

/// Exact collapse check: the original LUMI run and the collapsed
/// FSTA/FCOM runs must agree event-for-event on positions and colors,
/// with equal epoch counts and palettes.
struct CollapseOutcome {
  bool identical = false;
  std::string failure;
  int epochs = 0;
  int colors_used = 0;
};

CollapseOutcome check_collapse_exact(const Algorithm& inner, RobotModel target,
                                     const Schedule& sched, const PerRobot<Point>& init_positions);

}  // namespace lcmsim
