#pragma once

#include <vector>

#include "lcmsim/engine.hpp"

namespace lcmsim {

/// Raised when a simulator observes a composite light that its
/// handshake discipline can never produce; signals a simulator bug (or
/// a trace not produced by that simulator).
struct ProtocolViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- reference algorithms ------------------------------------------------

/// Colorless rule: go to the midpoint of self and observed peer.
Algorithm alg_go_to_midpoint();

/// Colorless rule: move the fraction `lambda` of the way to the peer.
/// lambda = 1/2 is go-to-midpoint.
Algorithm alg_lambda_step(const Rational& lambda);

/// Two colors {INIT, ANCHOR}, reads only the peer light: on INIT,
/// anchor and go to the midpoint; otherwise do nothing.
Algorithm alg_anchor_midpoint();

/// Two colors {INIT, DONE}, reads only its own light: hop `hop` along
/// the observed peer direction once, then stay forever.
Algorithm alg_single_move_fsta(const Rational& hop);

/// Colorless turn-and-shrink rule: map self by (u - rot90cw(u))/2 where
/// u is the observed peer offset. Activated together the pair performs
/// the quarter rotation about the midpoint; activated alone a robot
/// performs the pivot shrink about its peer.
Algorithm alg_sro_oblot();

/// Colorless doubling rule on the shared grid: step to
/// floor(2p - c) with c the midpoint of the observed pair. Requires the
/// grid oracle.
Algorithm alg_cge_fsynch();

/// Three colors, reads both lights: when the lights agree, advance the
/// own light and hop a quarter of the way to the peer; otherwise adopt
/// the peer light and stay.
Algorithm alg_token3();

/// Three colors, reads only the peer light: always advance to
/// peer + 1; hop a quarter toward the peer when the peer shows 0.
Algorithm alg_fcom_token3();

/// Three colors, reads only its own light: cycles it and hops a
/// quarter toward the peer every activation.
Algorithm alg_fsta_token3();

/// Never moves, never changes color. Test utility.
Algorithm alg_stay();

// ---- simulators ----------------------------------------------------------

/// Same-palette collapse for fully synchronous runs: feed the inner
/// algorithm the unit observation and fill the invisible light with the
/// visible one (the two are equal under full synchrony).
Algorithm sim_fsynch_collapse(const Algorithm& inner, RobotModel target);

/// Peer-light-only simulator of a both-lights algorithm for alternating
/// schedules: 3k^2 composite colors (my light, echoed peer light,
/// handshake phase), one inner step per decision turn.
Algorithm sim_rsynch_handshake(const Algorithm& inner);

/// Plain-asynchrony simulator of a peer-light-only algorithm that
/// assumes atomic Compute-Move: 12k composite colors (inner light,
/// phase, two state flags), of which only seven patterns per inner
/// light are reachable.
Algorithm sim_a(const Algorithm& inner);

enum class SimulatorKind { Collapse, Handshake, SimA };

// ---- composite color encodings -------------------------------------------

enum class Phase { Exc = 0, Cpy = 1, Rst = 2 };

struct HsColor {
  int my_light;
  int your_light;
  Phase phase;
};

Color hs_encode(const HsColor& c, int k);
HsColor hs_decode(const Color& c, int k);
inline int hs_palette(int k) { return 3 * k * k; }

struct SimAColor {
  int light;
  Phase phase;
  bool my_busy;    // this robot has decided in the current cycle
  bool your_busy;  // last copied peer flag
};

Color sima_encode(const SimAColor& c, int k);
SimAColor sima_decode(const Color& c, int k);
inline int sima_palette(int k) { return 12 * k; }

// ---- trace projection -----------------------------------------------------

/// One inner-algorithm step recovered from a simulator trace.
struct AbstractMove {
  RobotId robot;
  Snapshot snapshot;       // what the inner algorithm was fed
  Point destination_local;
  Color new_color;         // inner palette
  Rational t_look, t_compute, t_move_begin, t_move_end;
};

/// Simulator trace collapsed to inner-algorithm steps; moves with equal
/// Look times form one simultaneous step.
struct AbstractTrace {
  std::vector<AbstractMove> moves;  // in time order
  std::vector<std::vector<size_t>> steps;

  int steps_count() const { return static_cast<int>(steps.size()); }
};

/// Collapses decision turns (handshake), inner calls (sim-a) or whole
/// cycles (collapse) into abstract steps, verifying along the way that
/// the bookkeeping turns touch nothing the inner algorithm can see.
/// Throws ProtocolViolation when the phase discipline is broken.
AbstractTrace project_simulator_trace(const Trace& sim_trace, SimulatorKind kind, int inner_k);

/// The timed schedule induced by an abstract trace: one cycle per
/// abstract move, times copied from the simulator cycles.
Schedule induced_schedule(const AbstractTrace& abs, const Trace& sim_trace,
                          Atomicity declared, Synchrony synchrony);

/// Distinct composite color values that occur anywhere in the trace.
int distinct_colors_used(const Trace& trace);

}  // namespace lcmsim
