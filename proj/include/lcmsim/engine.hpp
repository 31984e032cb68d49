#pragma once

#include <variant>
#include <vector>

#include "lcmsim/schedule.hpp"

namespace lcmsim {

struct Configuration {
  PerRobot<Point> positions;
  PerRobot<Color> colors;
};

struct LookEvent {
  Snapshot snapshot;
};
struct ComputeEvent {
  Point destination_local;
  Color new_color;  // resolved value after the light update
};
struct MoveBeginEvent {
  Point from;
  Point to;
};
struct MoveEndEvent {
  Point at;
};

struct TraceEvent {
  enum class Kind { Look, Compute, MoveBegin, MoveEnd };
  Rational time;
  RobotId robot;
  int cycle_index = 1;
  Kind kind;
  std::variant<LookEvent, ComputeEvent, MoveBeginEvent, MoveEndEvent> payload;
};

/// One executed move window, including zero-length ones (they matter
/// for epochs but not for move counts).
struct MotionSegment {
  Rational t_begin, t_end;
  Point from, to;
  ProgressProfile profile;
  int cycle_index = 1;
};

/// Complete timed log of one execution. Positions are continuous and
/// piecewise linear in time; outside move windows a robot is
/// stationary.
struct Trace {
  Configuration initial;
  RobotModel model = RobotModel::OBLOT;
  bool grid_granted = false;
  int palette = 1;
  Schedule schedule;
  std::vector<TraceEvent> events;
  PerRobot<std::vector<MotionSegment>> motion;
  std::string scenario_text;  // opaque scenario echo for the trace header

  const Rational& horizon() const { return schedule.horizon; }
};

/// Executes the quadruple into a trace. Rejects unfair schedules,
/// decisions outside the palette, and initial colors that do not match
/// the algorithm's initial color.
Trace run(const Algorithm& alg, RobotModel model, const Schedule& sched,
          const Configuration& init, bool grid_granted);

/// Piecewise-linear position lookup; throws outside [0, horizon].
Point position_at(const Trace& trace, RobotId r, const Rational& t);

/// Light value at time t; changes take effect exactly at each Compute.
Color color_at(const Trace& trace, RobotId r, const Rational& t);

/// Number of maximal open intervals on which the robot's position is
/// non-constant. Zero-length moves do not count.
int moves_count(const Trace& trace, RobotId r);

/// The closures of those intervals, in time order.
std::vector<std::pair<Rational, Rational>> motion_intervals(const Trace& trace, RobotId r);

/// A time span where both robots satisfy the two-sided stopped
/// predicate. Endpoints bordering motion are open, since a stop needs a
/// constant neighbourhood on both sides.
struct StopInterval {
  Rational lo, hi;
  bool lo_open = false, hi_open = false;

  /// A time strictly inside the interval (or the instant itself when
  /// degenerate); positions are constant across the interval.
  Rational representative() const {
    return lo == hi ? lo : Rational(1, 2) * (lo + hi);
  }
};

std::vector<StopInterval> joint_stops(const Trace& trace);

/// Epoch boundaries after T0: each boundary is the earliest time by
/// which every robot has completed one more Move (zero-length counts)
/// than at the previous boundary.
std::vector<Rational> epochs(const Trace& trace, const Rational& t0 = Rational(0));

inline int epoch_count(const Trace& trace) { return static_cast<int>(epochs(trace).size()); }

}  // namespace lcmsim
