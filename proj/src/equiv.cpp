#include "lcmsim/equiv.hpp"

#include <sstream>

namespace lcmsim {

namespace {

bool snapshots_equal(const Snapshot& a, const Snapshot& b) {
  if (a.peer_offset != b.peer_offset) return false;
  if (a.own_color.has_value() != b.own_color.has_value()) return false;
  if (a.own_color && a.own_color->index != b.own_color->index) return false;
  if (a.peer_color.has_value() != b.peer_color.has_value()) return false;
  if (a.peer_color && a.peer_color->index != b.peer_color->index) return false;
  if (a.grid_oracle.has_value() != b.grid_oracle.has_value()) return false;
  if (a.grid_oracle && *a.grid_oracle != *b.grid_oracle) return false;
  return true;
}

// Mover sets must look like a synchronous prefix followed by strict
// alternation of singletons.
bool rsynch_shaped(const AbstractTrace& abs, std::string& why) {
  bool prefix_done = false;
  std::optional<RobotId> last_single;
  for (const auto& step : abs.steps) {
    if (step.size() == 2) {
      if (prefix_done) {
        why = "simultaneous step after alternation started";
        return false;
      }
    } else {
      RobotId r = abs.moves[step.front()].robot;
      if (prefix_done && last_single && *last_single == r) {
        why = "robot activated twice in a row during alternation";
        return false;
      }
      prefix_done = true;
      last_single = r;
    }
  }
  return true;
}

}  // namespace

EquivOutcome check_refinement(SimulatorKind kind, const Algorithm& inner,
                              RobotModel collapse_target, const Schedule& sched,
                              const PerRobot<Point>& init_positions, bool require_lcm) {
  EquivOutcome out;
  auto fail = [&](std::string why) {
    out.legal = false;
    out.failure = std::move(why);
    return out;
  };

  if (kind == SimulatorKind::Collapse) {
    // The collapse keeps the palette, so projection is the identity;
    // the exact event-for-event comparison is the stronger check.
    CollapseOutcome c = check_collapse_exact(inner, collapse_target, sched, init_positions);
    out.legal = c.identical;
    out.failure = c.failure;
    out.sim_epochs = out.abstract_epochs = c.epochs;
    out.abstract_steps = c.epochs;
    out.colors_used = c.colors_used;
    return out;
  }

  Algorithm simulator =
      kind == SimulatorKind::Handshake ? sim_rsynch_handshake(inner) : sim_a(inner);

  Configuration sim_init;
  sim_init.positions = init_positions;
  sim_init.colors[RobotId::A] = simulator.initial_color;
  sim_init.colors[RobotId::B] = simulator.initial_color;

  Trace sim_trace;
  AbstractTrace abs;
  try {
    sim_trace = run(simulator, RobotModel::FCOM, sched, sim_init, false);
    abs = project_simulator_trace(sim_trace, kind, inner.palette);
  } catch (const ProtocolViolation& e) {
    return fail(std::string("protocol violation: ") + e.what());
  }

  out.sim_epochs = epoch_count(sim_trace);
  out.abstract_steps = abs.steps_count();
  out.colors_used = distinct_colors_used(sim_trace);

  for (RobotId r : {RobotId::A, RobotId::B}) {
    bool any = false;
    for (const auto& m : abs.moves) any = any || m.robot == r;
    if (!any) return fail(std::string("no inner step for robot ") + name(r) + " within horizon");
  }

  Atomicity declared = kind == SimulatorKind::SimA ? Atomicity::CM : Atomicity::LCM;
  Schedule induced = induced_schedule(abs, sim_trace, declared, sched.synchrony);
  try {
    induced.validate_structure();
  } catch (const std::exception& e) {
    return fail(std::string("induced schedule malformed: ") + e.what());
  }

  if (kind == SimulatorKind::SimA) {
    if (!validate_atomicity(induced, Atomicity::CM).ok)
      return fail("induced schedule is not Compute-Move atomic");
    if (require_lcm && !validate_atomicity(induced, Atomicity::LCM).ok)
      return fail("induced schedule is not fully atomic");
  } else if (kind == SimulatorKind::Handshake) {
    std::string why;
    if (!rsynch_shaped(abs, why)) return fail("induced activation order: " + why);
    if (!validate_atomicity(induced, Atomicity::LCM).ok)
      return fail("induced schedule is not fully atomic");
  }

  Configuration direct_init;
  direct_init.positions = init_positions;
  direct_init.colors[RobotId::A] = inner.initial_color;
  direct_init.colors[RobotId::B] = inner.initial_color;

  RobotModel inner_model = kind == SimulatorKind::Handshake ? RobotModel::LUMI : RobotModel::FCOM;
  Trace direct;
  try {
    direct = run(inner, inner_model, induced, direct_init, false);
  } catch (const std::exception& e) {
    return fail(std::string("direct replay rejected: ") + e.what());
  }
  out.abstract_epochs = epoch_count(direct);

  // Match each abstract move against the direct run cycle for cycle.
  size_t cursor = 0;
  for (const auto& ev : direct.events) {
    if (ev.kind == TraceEvent::Kind::Look) {
      if (cursor >= abs.moves.size()) return fail("direct replay has extra cycles");
      const AbstractMove& m = abs.moves[cursor];
      const Snapshot& seen = std::get<LookEvent>(ev.payload).snapshot;
      if (ev.robot != m.robot || ev.time != m.t_look)
        return fail("direct replay cycle order diverged at t=" + ev.time.str());
      if (!snapshots_equal(seen, m.snapshot))
        return fail("snapshot mismatch at t=" + ev.time.str() + " for robot " + name(ev.robot));
    } else if (ev.kind == TraceEvent::Kind::Compute) {
      const AbstractMove& m = abs.moves[cursor];
      const auto& c = std::get<ComputeEvent>(ev.payload);
      if (c.destination_local != m.destination_local)
        return fail("destination mismatch at t=" + ev.time.str());
      if (c.new_color.index != m.new_color.index)
        return fail("color mismatch at t=" + ev.time.str());
      ++cursor;
    }
  }
  if (cursor != abs.moves.size()) return fail("direct replay is missing cycles");

  // Geometric agreement at every abstract move end.
  for (const auto& m : abs.moves) {
    for (RobotId r : {RobotId::A, RobotId::B}) {
      if (position_at(direct, r, m.t_move_end) != position_at(sim_trace, r, m.t_move_end)) {
        std::ostringstream os;
        os << "stop sequence diverged for robot " << name(r) << " at t=" << m.t_move_end.str();
        return fail(os.str());
      }
    }
  }

  out.legal = true;
  return out;
}

CollapseOutcome check_collapse_exact(const Algorithm& inner, RobotModel target,
                                     const Schedule& sched,
                                     const PerRobot<Point>& init_positions) {
  CollapseOutcome out;
  auto fail = [&](std::string why) {
    out.identical = false;
    out.failure = std::move(why);
    return out;
  };

  Algorithm collapsed = sim_fsynch_collapse(inner, target);
  if (collapsed.palette != inner.palette) return fail("palette changed");

  Configuration init;
  init.positions = init_positions;
  init.colors[RobotId::A] = inner.initial_color;
  init.colors[RobotId::B] = inner.initial_color;

  Trace original = run(inner, RobotModel::LUMI, sched, init, false);
  Trace collapsed_trace = run(collapsed, target, sched, init, false);

  if (original.events.size() != collapsed_trace.events.size()) return fail("event counts differ");
  for (size_t i = 0; i < original.events.size(); ++i) {
    const TraceEvent& a = original.events[i];
    const TraceEvent& b = collapsed_trace.events[i];
    if (a.time != b.time || a.robot != b.robot || a.kind != b.kind)
      return fail("event stream diverged at index " + std::to_string(i));
    if (a.kind == TraceEvent::Kind::Compute) {
      const auto& ca = std::get<ComputeEvent>(a.payload);
      const auto& cb = std::get<ComputeEvent>(b.payload);
      if (ca.new_color.index != cb.new_color.index)
        return fail("color trace diverged at t=" + a.time.str());
      if (ca.destination_local != cb.destination_local)
        return fail("decision trace diverged at t=" + a.time.str());
    }
    if (a.kind == TraceEvent::Kind::MoveEnd) {
      if (std::get<MoveEndEvent>(a.payload).at != std::get<MoveEndEvent>(b.payload).at)
        return fail("position trace diverged at t=" + a.time.str());
    }
  }
  if (epoch_count(original) != epoch_count(collapsed_trace)) return fail("epoch counts differ");

  out.identical = true;
  out.epochs = epoch_count(original);
  out.colors_used = distinct_colors_used(original);
  return out;
}

}  // namespace lcmsim
