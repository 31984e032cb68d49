#include "lcmsim/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcmsim {

namespace {

// Processing order at equal times. Computes precede Looks so that a
// snapshot taken at the instant of a peer's light change sees the new
// color; move boundaries are position-continuous either way.
int kind_rank(TraceEvent::Kind k) {
  switch (k) {
    case TraceEvent::Kind::MoveEnd: return 0;
    case TraceEvent::Kind::Compute: return 1;
    case TraceEvent::Kind::Look: return 2;
    case TraceEvent::Kind::MoveBegin: return 3;
  }
  return 4;
}

struct PendingCycle {
  Snapshot snapshot;
  Point own_at_look;
  Point peer_offset_global;  // true offset at the Look instant
  FrameChoice frame;
  bool valid = false;
};

Point position_in(const std::vector<MotionSegment>& segs, const Point& initial,
                  const Rational& t) {
  Point rest = initial;
  for (const auto& seg : segs) {
    if (t < seg.t_begin) return rest;
    if (t <= seg.t_end)
      return interpolate(seg.from, seg.to, seg.profile.eval(t, seg.t_begin, seg.t_end));
    rest = seg.to;
  }
  return rest;
}

}  // namespace

Trace run(const Algorithm& alg, RobotModel model, const Schedule& sched,
          const Configuration& init, bool grid_granted) {
  sched.validate_structure();
  if (!check_fairness(sched)) throw std::invalid_argument("run: unfair schedule");
  for (RobotId r : {RobotId::A, RobotId::B})
    if (init.colors[r] != alg.initial_color)
      throw std::invalid_argument("run: initial colors must match the algorithm's");

  Trace trace;
  trace.initial = init;
  trace.model = model;
  trace.grid_granted = grid_granted;
  trace.palette = alg.palette;
  trace.schedule = sched;

  struct Ev {
    Rational t;
    TraceEvent::Kind kind;
    const CycleSpec* cycle;
  };
  std::vector<Ev> queue;
  queue.reserve(sched.cycles.size() * 4);
  for (const auto& c : sched.cycles) {
    queue.push_back({c.t_look, TraceEvent::Kind::Look, &c});
    queue.push_back({c.t_compute, TraceEvent::Kind::Compute, &c});
    queue.push_back({c.t_move_begin, TraceEvent::Kind::MoveBegin, &c});
    queue.push_back({c.t_move_end, TraceEvent::Kind::MoveEnd, &c});
  }
  std::sort(queue.begin(), queue.end(), [](const Ev& a, const Ev& b) {
    if (a.t != b.t) return a.t < b.t;
    int ra = kind_rank(a.kind), rb = kind_rank(b.kind);
    if (ra != rb) return ra < rb;
    return idx(a.cycle->robot) < idx(b.cycle->robot);
  });

  PerRobot<Color> colors = init.colors;
  PerRobot<PendingCycle> pending;
  PerRobot<Point> pending_dest;  // destination of the cycle in flight

  auto pos_of = [&](RobotId r, const Rational& t) {
    return position_in(trace.motion[r], init.positions[r], t);
  };

  for (const auto& ev : queue) {
    RobotId r = ev.cycle->robot;
    FrameChoice frame = grid_granted ? FrameChoice::global() : ev.cycle->frame;
    switch (ev.kind) {
      case TraceEvent::Kind::Look: {
        PerRobot<Point> positions{{pos_of(RobotId::A, ev.t), pos_of(RobotId::B, ev.t)}};
        Snapshot snap = build_snapshot(positions, colors, r, model, frame, grid_granted);
        pending[r] = {snap, positions[r], positions[peer_of(r)] - positions[r], frame, true};
        trace.events.push_back({ev.t, r, ev.cycle->index, ev.kind, LookEvent{snap}});
        break;
      }
      case TraceEvent::Kind::Compute: {
        if (!pending[r].valid) throw std::logic_error("run: Compute without a Look");
        const PendingCycle& pend = pending[r];
        Decision decision = alg.decide(pend.snapshot);
        Color next = decision.color_update(colors[r]);
        if (next.index < 0 || next.index >= alg.palette)
          throw std::domain_error("run: decision color outside the palette");
        next.palette = alg.palette;
        colors[r] = next;
        Point dest = local_to_global(decision.destination_local, pend.frame, pend.own_at_look,
                                     pend.peer_offset_global);
        pending_dest[r] = dest;
        trace.motion[r].push_back({ev.cycle->t_move_begin, ev.cycle->t_move_end,
                                   pend.own_at_look, dest, ev.cycle->profile,
                                   ev.cycle->index});
        trace.events.push_back(
            {ev.t, r, ev.cycle->index, ev.kind, ComputeEvent{decision.destination_local, next}});
        pending[r].valid = false;
        break;
      }
      case TraceEvent::Kind::MoveBegin: {
        const auto& seg = trace.motion[r].back();
        trace.events.push_back({ev.t, r, ev.cycle->index, ev.kind, MoveBeginEvent{seg.from, seg.to}});
        break;
      }
      case TraceEvent::Kind::MoveEnd: {
        trace.events.push_back({ev.t, r, ev.cycle->index, ev.kind, MoveEndEvent{pending_dest[r]}});
        break;
      }
    }
  }
  return trace;
}

Point position_at(const Trace& trace, RobotId r, const Rational& t) {
  if (t < Rational(0) || t > trace.horizon())
    throw std::out_of_range("position_at: time outside the trace horizon");
  return position_in(trace.motion[r], trace.initial.positions[r], t);
}

Color color_at(const Trace& trace, RobotId r, const Rational& t) {
  Color c = trace.initial.colors[r];
  for (const auto& ev : trace.events) {
    if (ev.time > t) break;
    if (ev.robot == r && ev.kind == TraceEvent::Kind::Compute)
      c = std::get<ComputeEvent>(ev.payload).new_color;
  }
  return c;
}

// Closed time intervals on which the robot is actually in motion: the
// strictly increasing runs of each nontrivial segment's profile.
std::vector<std::pair<Rational, Rational>> motion_intervals(const Trace& trace, RobotId r) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& seg : trace.motion[r]) {
    if (seg.from == seg.to) continue;
    auto knots = seg.profile.full_knots(seg.t_begin, seg.t_end);
    size_t i = 0;
    while (i + 1 < knots.size()) {
      if (knots[i + 1].f > knots[i].f) {
        size_t j = i;
        while (j + 1 < knots.size() && knots[j + 1].f > knots[j].f) ++j;
        out.emplace_back(knots[i].t, knots[j].t);
        i = j;
      } else {
        ++i;
      }
    }
  }
  return out;
}

int moves_count(const Trace& trace, RobotId r) {
  return static_cast<int>(motion_intervals(trace, r).size());
}

std::vector<StopInterval> joint_stops(const Trace& trace) {
  auto closures = motion_intervals(trace, RobotId::A);
  auto b = motion_intervals(trace, RobotId::B);
  closures.insert(closures.end(), b.begin(), b.end());
  std::sort(closures.begin(), closures.end());
  std::vector<std::pair<Rational, Rational>> merged;
  for (const auto& c : closures) {
    if (!merged.empty() && c.first <= merged.back().second)
      merged.back().second = Rational::max(merged.back().second, c.second);
    else
      merged.push_back(c);
  }

  std::vector<StopInterval> stops;
  Rational cursor(0);
  bool cursor_open = false;
  for (const auto& m : merged) {
    if (cursor < m.first) stops.push_back({cursor, m.first, cursor_open, true});
    cursor = m.second;
    cursor_open = true;
  }
  if (cursor < trace.horizon())
    stops.push_back({cursor, trace.horizon(), cursor_open, false});
  else if (merged.empty())
    stops.push_back({Rational(0), trace.horizon(), false, false});
  return stops;
}

std::vector<Rational> epochs(const Trace& trace, const Rational& t0) {
  PerRobot<std::vector<Rational>> ends;
  for (RobotId r : {RobotId::A, RobotId::B})
    for (const auto& seg : trace.motion[r]) ends[r].push_back(seg.t_end);

  std::vector<Rational> boundaries;
  Rational t = t0;
  while (true) {
    Rational next = t;
    bool have_all = true;
    for (RobotId r : {RobotId::A, RobotId::B}) {
      auto it = std::upper_bound(ends[r].begin(), ends[r].end(), t);
      if (it == ends[r].end()) {
        have_all = false;
        break;
      }
      next = Rational::max(next, *it);
    }
    if (!have_all) break;
    boundaries.push_back(next);
    t = next;
  }
  return boundaries;
}

}  // namespace lcmsim
