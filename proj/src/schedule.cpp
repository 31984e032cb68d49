#include "lcmsim/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcmsim {

std::vector<ProgressProfile::Knot> ProgressProfile::full_knots(const Rational& t_begin,
                                                               const Rational& t_end) const {
  std::vector<Knot> full;
  full.push_back({t_begin, Rational(0)});
  full.insert(full.end(), knots.begin(), knots.end());
  full.push_back({t_end, Rational(1)});
  return full;
}

Rational ProgressProfile::eval(const Rational& t, const Rational& t_begin,
                               const Rational& t_end) const {
  if (t <= t_begin) return Rational(0);
  if (t >= t_end) return Rational(1);
  auto full = full_knots(t_begin, t_end);
  for (size_t i = 0; i + 1 < full.size(); ++i) {
    if (t >= full[i].t && t <= full[i + 1].t) {
      const Rational& t0 = full[i].t;
      const Rational& t1 = full[i + 1].t;
      const Rational& f0 = full[i].f;
      const Rational& f1 = full[i + 1].f;
      return f0 + (f1 - f0) * (t - t0) / (t1 - t0);
    }
  }
  return Rational(1);  // unreachable for valid profiles
}

Atomicity parse_atomicity(const std::string& s) {
  if (s == "NONE") return Atomicity::NONE;
  if (s == "LC") return Atomicity::LC;
  if (s == "CM") return Atomicity::CM;
  if (s == "LCM") return Atomicity::LCM;
  throw std::invalid_argument("unknown atomicity class: " + s);
}

const char* atomicity_name(Atomicity a) {
  switch (a) {
    case Atomicity::NONE: return "NONE";
    case Atomicity::LC: return "LC";
    case Atomicity::CM: return "CM";
    case Atomicity::LCM: return "LCM";
  }
  return "?";
}

Synchrony parse_synchrony(const std::string& s) {
  if (s == "FSYNCH") return Synchrony::FSYNCH;
  if (s == "RSYNCH") return Synchrony::RSYNCH;
  if (s == "SSYNCH") return Synchrony::SSYNCH;
  if (s == "ASYNCH") return Synchrony::ASYNCH;
  throw std::invalid_argument("unknown synchrony class: " + s);
}

const char* synchrony_name(Synchrony s) {
  switch (s) {
    case Synchrony::FSYNCH: return "FSYNCH";
    case Synchrony::RSYNCH: return "RSYNCH";
    case Synchrony::SSYNCH: return "SSYNCH";
    case Synchrony::ASYNCH: return "ASYNCH";
  }
  return "?";
}

std::vector<const CycleSpec*> Schedule::cycles_of(RobotId r) const {
  std::vector<const CycleSpec*> out;
  for (const auto& c : cycles)
    if (c.robot == r) out.push_back(&c);
  std::sort(out.begin(), out.end(),
            [](const CycleSpec* a, const CycleSpec* b) { return a->index < b->index; });
  return out;
}

void Schedule::validate_structure() const {
  for (const auto& c : cycles) {
    if (!(c.t_look < c.t_compute && c.t_compute < c.t_move_begin &&
          c.t_move_begin < c.t_move_end))
      throw std::invalid_argument("schedule: cycle times out of order for robot " +
                                  std::string(name(c.robot)) + " cycle " +
                                  std::to_string(c.index));
    auto full = c.profile.full_knots(c.t_move_begin, c.t_move_end);
    for (size_t i = 0; i + 1 < full.size(); ++i) {
      if (!(full[i].t < full[i + 1].t))
        throw std::invalid_argument("schedule: profile times not increasing");
      if (full[i].f > full[i + 1].f)
        throw std::invalid_argument("schedule: profile not monotone");
    }
    if (full.front().f < Rational(0) || full.back().f > Rational(1))
      throw std::invalid_argument("schedule: profile fraction outside [0,1]");
    if (c.t_move_end > horizon)
      throw std::invalid_argument("schedule: cycle ends past the horizon");
  }
  for (RobotId r : {RobotId::A, RobotId::B}) {
    auto own = cycles_of(r);
    for (size_t i = 0; i < own.size(); ++i) {
      if (own[i]->index != static_cast<int>(i) + 1)
        throw std::invalid_argument("schedule: cycle indices not contiguous");
      if (i > 0 && !(own[i - 1]->t_move_end < own[i]->t_look))
        throw std::invalid_argument("schedule: overlapping cycles for one robot");
    }
  }
}

AtomicityReport validate_atomicity(const Schedule& s, Atomicity klass) {
  AtomicityReport report;
  if (klass == Atomicity::NONE) return report;
  for (const auto& looker : s.cycles) {
    const Rational& t = looker.t_look;
    for (const auto& other : s.cycles) {
      if (other.robot == looker.robot && other.index == looker.index) continue;
      bool lc = t > other.t_look && t <= other.t_compute;
      bool cm = t >= other.t_compute && t <= other.t_move_end;
      bool lcm_extra = t > other.t_look && t <= other.t_move_end;
      bool bad = false;
      switch (klass) {
        case Atomicity::NONE: break;
        case Atomicity::LC: bad = lc; break;
        case Atomicity::CM: bad = cm; break;
        case Atomicity::LCM: bad = lc || cm || lcm_extra; break;
      }
      if (bad)
        report.violations.push_back({looker.robot, looker.index, other.robot, other.index});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

bool check_fairness(const Schedule& s) {
  for (RobotId r : {RobotId::A, RobotId::B}) {
    auto own = s.cycles_of(r);
    if (own.empty()) return false;
    if (own.back()->t_move_end > s.horizon) return false;
  }
  return true;
}

namespace {

// One synchronized unit block at integer time `slot` for `robot`.
CycleSpec block_cycle(RobotId robot, int index, long slot) {
  CycleSpec c;
  c.robot = robot;
  c.index = index;
  c.t_look = Rational(slot);
  c.t_compute = Rational(4 * slot + 1, 4);
  c.t_move_begin = Rational(4 * slot + 2, 4);
  c.t_move_end = Rational(4 * slot + 3, 4);
  return c;
}

void sort_by_look(Schedule& s) {
  std::stable_sort(s.cycles.begin(), s.cycles.end(), [](const CycleSpec& a, const CycleSpec& b) {
    if (a.t_look != b.t_look) return a.t_look < b.t_look;
    return idx(a.robot) < idx(b.robot);
  });
}

}  // namespace

Schedule gen_fsynch(int rounds) {
  if (rounds < 1) throw std::invalid_argument("gen_fsynch: rounds must be >= 1");
  Schedule s;
  s.atomicity = Atomicity::LCM;
  s.synchrony = Synchrony::FSYNCH;
  for (int j = 0; j < rounds; ++j) {
    s.cycles.push_back(block_cycle(RobotId::A, j + 1, j));
    s.cycles.push_back(block_cycle(RobotId::B, j + 1, j));
  }
  s.horizon = Rational(rounds);
  sort_by_look(s);
  return s;
}

Schedule gen_rsynch(int prefix_rounds, int alt_turns, RobotId first) {
  if (prefix_rounds < 0 || alt_turns < 0 || prefix_rounds + alt_turns < 1)
    throw std::invalid_argument("gen_rsynch: need at least one round");
  Schedule s;
  s.atomicity = Atomicity::LCM;
  s.synchrony = Synchrony::RSYNCH;
  PerRobot<int> next_index{{1, 1}};
  long slot = 0;
  for (int j = 0; j < prefix_rounds; ++j, ++slot) {
    s.cycles.push_back(block_cycle(RobotId::A, next_index[RobotId::A]++, slot));
    s.cycles.push_back(block_cycle(RobotId::B, next_index[RobotId::B]++, slot));
  }
  RobotId turn = first;
  for (int j = 0; j < alt_turns; ++j, ++slot) {
    s.cycles.push_back(block_cycle(turn, next_index[turn]++, slot));
    turn = peer_of(turn);
  }
  s.horizon = Rational(slot);
  sort_by_look(s);
  return s;
}

Schedule gen_ssynch(std::uint64_t seed, int rounds, int window) {
  if (rounds < 1) throw std::invalid_argument("gen_ssynch: rounds must be >= 1");
  if (window < 1) throw std::invalid_argument("gen_ssynch: window must be >= 1");
  Rng rng(seed);
  Schedule s;
  s.atomicity = Atomicity::LCM;
  s.synchrony = Synchrony::SSYNCH;
  PerRobot<int> next_index{{1, 1}};
  PerRobot<int> idle{{0, 0}};
  for (int j = 0; j < rounds; ++j) {
    std::uint64_t pick = 1 + rng.below(3);  // 1={A}, 2={B}, 3={A,B}
    PerRobot<bool> active{{(pick & 1) != 0, (pick & 2) != 0}};
    for (RobotId r : {RobotId::A, RobotId::B})
      if (idle[r] >= window - 1) active[r] = true;
    for (RobotId r : {RobotId::A, RobotId::B}) {
      if (active[r]) {
        s.cycles.push_back(block_cycle(r, next_index[r]++, j));
        idle[r] = 0;
      } else {
        ++idle[r];
      }
    }
  }
  s.horizon = Rational(rounds);
  sort_by_look(s);
  return s;
}

namespace {

// 1/16-grid increments keep denominators small across a whole run.
Rational grid_gap(Rng& rng) { return Rational(1 + static_cast<long>(rng.below(32)), 16); }
Rational grid_step(Rng& rng) { return Rational(1 + static_cast<long>(rng.below(16)), 16); }

bool look_time_ok(const Rational& t, const CycleSpec& other, Atomicity klass) {
  bool lc = t > other.t_look && t <= other.t_compute;
  bool cm = t >= other.t_compute && t <= other.t_move_end;
  switch (klass) {
    case Atomicity::NONE: return true;
    case Atomicity::LC: return !lc;
    case Atomicity::CM: return !cm;
    case Atomicity::LCM: return !(lc || cm || (t > other.t_look && t <= other.t_move_end));
  }
  return true;
}

}  // namespace

Schedule gen_asynch(std::uint64_t seed, int cycles_per_robot, Atomicity klass) {
  if (cycles_per_robot < 1) throw std::invalid_argument("gen_asynch: cycles_per_robot >= 1");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt));
    Schedule s;
    s.atomicity = klass;
    s.synchrony = Synchrony::ASYNCH;
    for (RobotId r : {RobotId::A, RobotId::B}) {
      Rational t(static_cast<long>(rng.below(33)), 16);
      for (int i = 1; i <= cycles_per_robot; ++i) {
        CycleSpec c;
        c.robot = r;
        c.index = i;
        c.t_look = t + grid_gap(rng);
        c.t_compute = c.t_look + grid_step(rng);
        c.t_move_begin = c.t_compute + grid_step(rng);
        c.t_move_end = c.t_move_begin + grid_step(rng);
        t = c.t_move_end;
        s.cycles.push_back(c);
      }
    }

    // Repair pass: relocate offending Look times. Moving a Look never
    // changes CM windows, and LC windows converge after a few sweeps.
    bool stuck = false;
    for (int pass = 0; pass < 10 && !stuck; ++pass) {
      auto report = validate_atomicity(s, klass);
      if (report.ok) break;
      for (const auto& v : report.violations) {
        CycleSpec* cyc = nullptr;
        for (auto& c : s.cycles)
          if (c.robot == v.looker && c.index == v.look_cycle) cyc = &c;
        if (!cyc) continue;
        Rational lo(0);
        for (const auto& c : s.cycles)
          if (c.robot == cyc->robot && c.index == cyc->index - 1) lo = c.t_move_end;
        const Rational hi = cyc->t_compute;
        bool placed = false;
        for (int tries = 0; tries < 96 && !placed; ++tries) {
          long k = 1 + static_cast<long>(rng.below(127));
          Rational candidate = lo + Rational(k, 128) * (hi - lo);
          bool ok = true;
          for (const auto& other : s.cycles) {
            if (other.robot == cyc->robot) continue;
            if (!look_time_ok(candidate, other, klass)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            cyc->t_look = candidate;
            placed = true;
          }
        }
        if (!placed) {
          stuck = true;
          break;
        }
      }
    }
    if (stuck) continue;
    if (!validate_atomicity(s, klass).ok) continue;

    Rational max_end(0);
    for (const auto& c : s.cycles) max_end = Rational::max(max_end, c.t_move_end);
    s.horizon = max_end + Rational(1);
    sort_by_look(s);
    s.validate_structure();
    return s;
  }
  throw std::runtime_error("gen_asynch: could not satisfy atomicity class");
}

}  // namespace lcmsim
