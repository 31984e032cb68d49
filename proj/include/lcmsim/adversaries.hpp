#pragma once

#include <vector>

#include "lcmsim/engine.hpp"

namespace lcmsim {

/// Distance factor left after one stale midpoint move that was
/// preceded by r fresh midpoint moves of the peer: 1/2 for r = 0,
/// (2^(r-1) - 1) / 2^r for r >= 1.
Rational psi(int r);

struct StaleInterleave {
  Schedule schedule;
  /// A time at which both robots rest right after the stale move lands;
  /// the distance there is psi(r) times the distance at the stale Look.
  Rational measure_time;
};

/// Compute-Move-atomic schedule in which robot A Looks at a stopped
/// configuration, robot B then completes r full cycles, and only then
/// A's stale move executes.
StaleInterleave adv_psi_interleave(int r);

struct StaleChain {
  Schedule schedule;
  std::vector<Rational> measure_times;  // one per block, after the stale move
};

/// Sequential stale-interleave blocks with the stale role alternating;
/// block l delays its mover behind counts[l] fresh peer cycles.
StaleChain adv_psi_chain(const std::vector<int>& counts);

struct DmsdBreak {
  Schedule schedule;
  Rational expected_ratio;  // |1 - 2*lambda + lambda^2 * x|
  Rational lambda;          // the fraction the algorithm under test must step
};

/// Fair non-atomic schedule defeating the dyadic stopped-distance
/// requirement for any rule that steps the fraction lambda toward the
/// peer: B looks when A's move progress equals x and both arrivals
/// coincide. Pair with alg_lambda_step(lambda).
DmsdBreak adv_dmsd_break(const Rational& lambda, const Rational& x);

struct MirrorSetup {
  Schedule schedule;
  Configuration init;  // colors must be overwritten with the algorithm's initial
};

/// Point-symmetric start (-p,0)/(p,0) with equal colors under a
/// synchronous-rounds prefix of an alternating-class schedule, unit
/// observation frames. Both robots see identical snapshots every round,
/// so positions stay exact mirrors, colors stay equal, and move counts
/// stay equal; in particular no one-sided move asymmetry can emerge.
MirrorSetup adv_mirror_rsynch(int horizon_turns, const Rational& p = Rational(1));

}  // namespace lcmsim
