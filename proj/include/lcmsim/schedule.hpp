#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcmsim/model.hpp"

namespace lcmsim {

/// Monotone piecewise-linear map from the move window [tB, tE] onto
/// [0,1]; the fraction of the segment covered at each instant. The
/// default is linear in time; adversaries may pin interior
/// (time, fraction) pairs.
struct ProgressProfile {
  struct Knot {
    Rational t;
    Rational f;
  };
  std::vector<Knot> knots;  // empty means linear

  bool is_linear() const { return knots.empty(); }

  static ProgressProfile linear() { return {}; }

  /// Linear except that progress equals `f` exactly at time `t`.
  static ProgressProfile pinned(Rational t, Rational f) { return {{{std::move(t), std::move(f)}}}; }

  Rational eval(const Rational& t, const Rational& t_begin, const Rational& t_end) const;

  /// Knots with the window endpoints prepended/appended.
  std::vector<Knot> full_knots(const Rational& t_begin, const Rational& t_end) const;
};

enum class Atomicity { NONE, LC, CM, LCM };
enum class Synchrony { FSYNCH, RSYNCH, SSYNCH, ASYNCH };

Atomicity parse_atomicity(const std::string& s);
const char* atomicity_name(Atomicity a);
Synchrony parse_synchrony(const std::string& s);
const char* synchrony_name(Synchrony s);

/// One timed robot cycle: Look at tL, Compute at tC, Move over [tB, tE],
/// with tL < tC < tB < tE and no overlap with the robot's other cycles.
struct CycleSpec {
  RobotId robot;
  int index = 1;  // 1-based per robot
  Rational t_look, t_compute, t_move_begin, t_move_end;
  FrameChoice frame;
  ProgressProfile profile;
};

struct Schedule {
  std::vector<CycleSpec> cycles;  // ordered by t_look
  Atomicity atomicity = Atomicity::NONE;
  Synchrony synchrony = Synchrony::ASYNCH;
  Rational horizon;

  std::vector<const CycleSpec*> cycles_of(RobotId r) const;
  /// Throws unless per-cycle ordering, per-robot disjointness and
  /// profile monotonicity all hold.
  void validate_structure() const;
};

struct AtomicityViolation {
  RobotId looker;
  int look_cycle;
  RobotId other;
  int other_cycle;
};

struct AtomicityReport {
  bool ok = true;
  std::vector<AtomicityViolation> violations;
};

/// Checks the quantified timing condition of the given class literally
/// over all cycle pairs. LC forbids a Look in a peer's (tL, tC]; CM in
/// [tC, tE]; LCM additionally in (tL, tE] (simultaneous Looks allowed).
AtomicityReport validate_atomicity(const Schedule& s, Atomicity klass);

/// Finite-horizon fairness surrogate: both robots own at least one
/// complete cycle and every cycle ends within the horizon.
bool check_fairness(const Schedule& s);

/// Deterministic RNG used by every generator; raw engine outputs only,
/// no library distributions, so streams are stable across platforms.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen() % n; }
  bool coin() { return (gen() & 1) != 0; }
};

/// Both robots activated every round; rounds are unit time blocks at
/// integer times.
Schedule gen_fsynch(int rounds);

/// `prefix_rounds` fully synchronous rounds, then `alt_turns` single-
/// robot rounds strictly alternating starting with `first`.
Schedule gen_rsynch(int prefix_rounds, int alt_turns, RobotId first);

/// Per round a seeded-random non-empty subset acts synchronously; any
/// robot idle for `window` consecutive rounds is forced active.
Schedule gen_ssynch(std::uint64_t seed, int rounds, int window = 3);

/// Random interleaved cycle times on a coarse rational grid, rejection-
/// repaired until the requested atomicity class holds.
Schedule gen_asynch(std::uint64_t seed, int cycles_per_robot, Atomicity klass);

}  // namespace lcmsim
