#include "lcmsim/adversaries.hpp"

#include <stdexcept>

namespace lcmsim {

Rational psi(int r) {
  if (r < 0) throw std::domain_error("psi: r must be non-negative");
  if (r == 0) return Rational(1, 2);
  mpz_class num = (mpz_class(1) << (r - 1)) - 1;
  mpz_class den = mpz_class(1) << r;
  return Rational(num, den);
}

namespace {

// One stale block starting at `base`: X looks immediately, Y runs
// `fresh` full cycles, then X's move executes. Appends cycles and
// returns the measure time just after X's move lands.
Rational append_stale_block(Schedule& s, PerRobot<int>& next_index, RobotId stale, int fresh,
                            const Rational& base) {
  RobotId peer = peer_of(stale);
  for (int j = 0; j < fresh; ++j) {
    CycleSpec c;
    c.robot = peer;
    c.index = next_index[peer]++;
    c.t_look = base + Rational(j + 1);
    c.t_compute = base + Rational(4 * j + 5, 4);
    c.t_move_begin = base + Rational(2 * j + 3, 2);
    c.t_move_end = base + Rational(4 * j + 7, 4);
    s.cycles.push_back(c);
  }
  CycleSpec x;
  x.robot = stale;
  x.index = next_index[stale]++;
  x.t_look = base;
  x.t_compute = base + Rational(fresh + 1);
  x.t_move_begin = base + Rational(2 * fresh + 3, 2);
  x.t_move_end = base + Rational(4 * fresh + 7, 4);
  s.cycles.push_back(x);
  return x.t_move_end + Rational(1, 4);
}

void finish_schedule(Schedule& s) {
  Rational max_end(0);
  for (const auto& c : s.cycles) max_end = Rational::max(max_end, c.t_move_end);
  s.horizon = max_end + Rational(1);
  std::stable_sort(s.cycles.begin(), s.cycles.end(), [](const CycleSpec& a, const CycleSpec& b) {
    if (a.t_look != b.t_look) return a.t_look < b.t_look;
    return idx(a.robot) < idx(b.robot);
  });
  s.validate_structure();
}

}  // namespace

StaleInterleave adv_psi_interleave(int r) {
  if (r < 0) throw std::domain_error("adv_psi_interleave: r must be non-negative");
  Schedule s;
  s.atomicity = Atomicity::CM;
  s.synchrony = Synchrony::ASYNCH;
  PerRobot<int> next_index{{1, 1}};
  Rational measure = append_stale_block(s, next_index, RobotId::A, r, Rational(0));
  if (r == 0) {
    // Fairness: B still owes a cycle; run it after the measurement.
    CycleSpec c;
    c.robot = RobotId::B;
    c.index = next_index[RobotId::B]++;
    c.t_look = measure + Rational(1);
    c.t_compute = c.t_look + Rational(1, 4);
    c.t_move_begin = c.t_look + Rational(1, 2);
    c.t_move_end = c.t_look + Rational(3, 4);
    s.cycles.push_back(c);
  }
  finish_schedule(s);
  return {std::move(s), std::move(measure)};
}

StaleChain adv_psi_chain(const std::vector<int>& counts) {
  if (counts.empty()) throw std::domain_error("adv_psi_chain: need at least one block");
  Schedule s;
  s.atomicity = Atomicity::CM;
  s.synchrony = Synchrony::ASYNCH;
  PerRobot<int> next_index{{1, 1}};
  StaleChain out;
  Rational base(0);
  RobotId stale = RobotId::A;
  for (int fresh : counts) {
    if (fresh < 0) throw std::domain_error("adv_psi_chain: counts must be non-negative");
    Rational measure = append_stale_block(s, next_index, stale, fresh, base);
    out.measure_times.push_back(measure);
    base = measure + Rational(3, 4);
    stale = peer_of(stale);
  }
  for (RobotId r : {RobotId::A, RobotId::B}) {
    if (next_index[r] == 1) {  // single block with no fresh cycles
      CycleSpec c;
      c.robot = r;
      c.index = next_index[r]++;
      c.t_look = base + Rational(1);
      c.t_compute = c.t_look + Rational(1, 4);
      c.t_move_begin = c.t_look + Rational(1, 2);
      c.t_move_end = c.t_look + Rational(3, 4);
      s.cycles.push_back(c);
    }
  }
  finish_schedule(s);
  out.schedule = std::move(s);
  return out;
}

DmsdBreak adv_dmsd_break(const Rational& lambda, const Rational& x) {
  if (lambda <= Rational(0) || lambda > Rational(1))
    throw std::domain_error("adv_dmsd_break: lambda must lie in (0,1]");
  if (x <= Rational(0) || x >= Rational(1))
    throw std::domain_error("adv_dmsd_break: x must lie strictly inside (0,1)");

  Schedule s;
  s.atomicity = Atomicity::NONE;
  s.synchrony = Synchrony::ASYNCH;

  CycleSpec a;
  a.robot = RobotId::A;
  a.index = 1;
  a.t_look = Rational(0);
  a.t_compute = Rational(1, 4);
  a.t_move_begin = Rational(1, 2);
  a.t_move_end = Rational(2);
  a.profile = ProgressProfile::pinned(Rational(1), x);  // progress is x when B looks

  CycleSpec b;
  b.robot = RobotId::B;
  b.index = 1;
  b.t_look = Rational(1);
  b.t_compute = Rational(5, 4);
  b.t_move_begin = Rational(3, 2);
  b.t_move_end = Rational(2);  // both arrivals coincide

  s.cycles = {a, b};
  s.horizon = Rational(3);
  finish_schedule(s);

  Rational ratio = (Rational(1) - Rational(2) * lambda + lambda * lambda * x).abs();
  return {std::move(s), std::move(ratio), lambda};
}

MirrorSetup adv_mirror_rsynch(int horizon_turns, const Rational& p) {
  if (horizon_turns < 1) throw std::domain_error("adv_mirror_rsynch: need at least one turn");
  if (p <= Rational(0)) throw std::domain_error("adv_mirror_rsynch: p must be positive");
  // Simultaneous rounds are the only activations that keep exact point
  // symmetry for every rule: under unit frames both robots see the same
  // snapshot, command the same local destination, and the two global
  // images are point reflections of each other. The rounds form the
  // synchronous prefix of an alternating-class schedule.
  MirrorSetup out;
  out.schedule = gen_rsynch(horizon_turns, 0, RobotId::A);
  out.init.positions[RobotId::A] = Point{-p, Rational(0)};
  out.init.positions[RobotId::B] = Point{p, Rational(0)};
  return out;
}

}  // namespace lcmsim
