#include "lcmsim/protocols.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcmsim {

namespace {

Point quarter(const Point& p) { return Rational(1, 4) * p; }

const Snapshot& need_peer_color(const Snapshot& s, const char* who) {
  if (!s.peer_color) throw std::domain_error(std::string(who) + ": peer light not visible");
  return s;
}

const Snapshot& need_own_color(const Snapshot& s, const char* who) {
  if (!s.own_color) throw std::domain_error(std::string(who) + ": own light not visible");
  return s;
}

}  // namespace

Algorithm alg_go_to_midpoint() {
  Algorithm a;
  a.id = "alg.midpoint";
  a.palette = 1;
  a.decide = [](const Snapshot& s) {
    return Decision::move_keep_color(midpoint(Point{Rational(0), Rational(0)}, s.peer_offset));
  };
  return a;
}

Algorithm alg_lambda_step(const Rational& lambda) {
  if (lambda <= Rational(0) || lambda > Rational(1))
    throw std::domain_error("alg_lambda_step: lambda must lie in (0,1]");
  Algorithm a;
  a.id = "alg.lambda_step";
  a.palette = 1;
  a.decide = [lambda](const Snapshot& s) {
    return Decision::move_keep_color(lambda * s.peer_offset);
  };
  return a;
}

Algorithm alg_anchor_midpoint() {
  constexpr int kInit = 0, kAnchor = 1;
  Algorithm a;
  a.id = "alg.anchor_midpoint";
  a.palette = 2;
  a.initial_color = {kInit, 2};
  a.decide = [](const Snapshot& s) {
    need_peer_color(s, "alg.anchor_midpoint");
    if (s.peer_color->index == kInit)
      return Decision::move_set_color(Rational(1, 2) * s.peer_offset, Color{kAnchor, 2});
    return Decision::stay_keep_color();
  };
  return a;
}

Algorithm alg_single_move_fsta(const Rational& hop) {
  if (hop <= Rational(0)) throw std::domain_error("alg_single_move_fsta: hop must be positive");
  constexpr int kInit = 0, kDone = 1;
  Algorithm a;
  a.id = "alg.single_move";
  a.palette = 2;
  a.initial_color = {kInit, 2};
  a.decide = [hop](const Snapshot& s) {
    need_own_color(s, "alg.single_move");
    if (s.own_color->index == kDone) return Decision::stay_keep_color();
    if (s.peer_offset.is_origin())  // no direction to hop along
      return Decision{Point{Rational(0), Rational(0)}, [](const Color&) { return Color{kDone, 2}; }};
    return Decision::move_set_color(Point{Rational(0), hop}, Color{kDone, 2});
  };
  return a;
}

Algorithm alg_sro_oblot() {
  Algorithm a;
  a.id = "alg.sro_oblot";
  a.palette = 1;
  a.decide = [](const Snapshot& s) {
    const Point& u = s.peer_offset;
    if (u.is_origin()) return Decision::stay_keep_color();
    Point cw{u.y, -u.x};
    return Decision::move_keep_color(Rational(1, 2) * (u - cw));
  };
  return a;
}

Algorithm alg_cge_fsynch() {
  Algorithm a;
  a.id = "alg.cge_fsynch";
  a.palette = 1;
  a.decide = [](const Snapshot& s) {
    if (!s.grid_oracle) throw std::domain_error("alg.cge_fsynch: needs the grid oracle");
    Point own = *s.grid_oracle;
    Point peer = own + s.peer_offset;
    Point target = cge_step(own, midpoint(own, peer));
    return Decision::move_keep_color(target - own);
  };
  return a;
}

Algorithm alg_token3() {
  Algorithm a;
  a.id = "alg.token3";
  a.palette = 3;
  a.initial_color = {0, 3};
  a.decide = [](const Snapshot& s) {
    need_own_color(s, "alg.token3");
    need_peer_color(s, "alg.token3");
    if (s.own_color->index == s.peer_color->index) {
      Color next{(s.own_color->index + 1) % 3, 3};
      return Decision::move_set_color(quarter(s.peer_offset), next);
    }
    return Decision{Point{Rational(0), Rational(0)},
                    [c = *s.peer_color](const Color&) { return Color{c.index, 3}; }};
  };
  return a;
}

Algorithm alg_fcom_token3() {
  Algorithm a;
  a.id = "alg.fcom_token3";
  a.palette = 3;
  a.initial_color = {0, 3};
  a.decide = [](const Snapshot& s) {
    need_peer_color(s, "alg.fcom_token3");
    Color next{(s.peer_color->index + 1) % 3, 3};
    Point dest = s.peer_color->index == 0 ? quarter(s.peer_offset) : Point{Rational(0), Rational(0)};
    return Decision{dest, [next](const Color&) { return next; }};
  };
  return a;
}

Algorithm alg_fsta_token3() {
  Algorithm a;
  a.id = "alg.fsta_token3";
  a.palette = 3;
  a.initial_color = {0, 3};
  a.decide = [](const Snapshot& s) {
    need_own_color(s, "alg.fsta_token3");
    Color next{(s.own_color->index + 1) % 3, 3};
    return Decision{quarter(s.peer_offset), [next](const Color&) { return next; }};
  };
  return a;
}

Algorithm alg_stay() {
  Algorithm a;
  a.id = "alg.stay";
  a.palette = 1;
  a.decide = [](const Snapshot&) { return Decision::stay_keep_color(); };
  return a;
}

// ---- collapse --------------------------------------------------------------

Algorithm sim_fsynch_collapse(const Algorithm& inner, RobotModel target) {
  if (target != RobotModel::FSTA && target != RobotModel::FCOM)
    throw std::invalid_argument("sim_fsynch_collapse: target must be FSTA or FCOM");
  Algorithm a;
  a.id = inner.id + "+collapse";
  a.palette = inner.palette;
  a.initial_color = inner.initial_color;
  a.decide = [inner, target](const Snapshot& s) {
    Snapshot fed = s;
    if (!fed.peer_offset.is_origin()) fed.peer_offset = Point{Rational(0), Rational(1)};
    if (target == RobotModel::FSTA)
      fed.peer_color = s.own_color;  // lights agree under full synchrony
    else
      fed.own_color = s.peer_color;
    return inner.decide(fed);
  };
  return a;
}

// ---- handshake --------------------------------------------------------------

Color hs_encode(const HsColor& c, int k) {
  return Color{(c.my_light * k + c.your_light) * 3 + static_cast<int>(c.phase), hs_palette(k)};
}

HsColor hs_decode(const Color& c, int k) {
  int v = c.index;
  HsColor out{0, 0, Phase::Exc};
  out.phase = static_cast<Phase>(v % 3);
  v /= 3;
  out.your_light = v % k;
  out.my_light = v / k;
  return out;
}

Algorithm sim_rsynch_handshake(const Algorithm& inner) {
  const int k = inner.palette;
  Algorithm a;
  a.id = inner.id + "+handshake";
  a.palette = hs_palette(k);
  a.initial_color = hs_encode({inner.initial_color.index, inner.initial_color.index, Phase::Cpy}, k);
  a.decide = [inner, k](const Snapshot& s) {
    need_peer_color(s, "sim.handshake");
    HsColor peer = hs_decode(*s.peer_color, k);
    switch (peer.phase) {
      case Phase::Exc: {
        // Decision turn. The peer's echo of my light is my own current
        // light; its published light is the peer's own.
        Snapshot fed;
        fed.peer_offset = s.peer_offset;
        fed.own_color = Color{peer.your_light, k};
        fed.peer_color = Color{peer.my_light, k};
        fed.grid_oracle = s.grid_oracle;
        Decision d = inner.decide(fed);
        Color inner_new = d.color_update(Color{peer.your_light, k});
        if (inner_new.index < 0 || inner_new.index >= k)
          throw std::domain_error("sim.handshake: inner color outside palette");
        return Decision{d.destination_local, [inner_new, k](const Color& old) {
                          HsColor mine = hs_decode(old, k);
                          return hs_encode({inner_new.index, mine.your_light, Phase::Cpy}, k);
                        }};
      }
      case Phase::Cpy:
        return Decision{Point{Rational(0), Rational(0)}, [peer, k](const Color& old) {
                          HsColor mine = hs_decode(old, k);
                          return hs_encode({mine.my_light, peer.my_light, Phase::Rst}, k);
                        }};
      case Phase::Rst:
        return Decision{Point{Rational(0), Rational(0)}, [peer, k](const Color& old) {
                          HsColor mine = hs_decode(old, k);
                          return hs_encode({mine.my_light, peer.my_light, Phase::Exc}, k);
                        }};
    }
    throw std::logic_error("sim.handshake: bad phase");
  };
  return a;
}

// ---- sim-a -------------------------------------------------------------------

Color sima_encode(const SimAColor& c, int k) {
  int v = ((c.light * 3 + static_cast<int>(c.phase)) * 2 + (c.my_busy ? 1 : 0)) * 2 +
          (c.your_busy ? 1 : 0);
  return Color{v, sima_palette(k)};
}

SimAColor sima_decode(const Color& c, int k) {
  int v = c.index;
  SimAColor out{0, Phase::Exc, false, false};
  out.your_busy = (v & 1) != 0;
  v >>= 1;
  out.my_busy = (v & 1) != 0;
  v >>= 1;
  out.phase = static_cast<Phase>(v % 3);
  out.light = v / 3;
  (void)k;
  return out;
}

Algorithm sim_a(const Algorithm& inner) {
  const int k = inner.palette;
  Algorithm a;
  a.id = inner.id + "+sim_a";
  a.palette = sima_palette(k);
  a.initial_color = sima_encode({inner.initial_color.index, Phase::Exc, false, false}, k);
  a.decide = [inner, k](const Snapshot& s) {
    need_peer_color(s, "sim.a");
    SimAColor peer = sima_decode(*s.peer_color, k);
    const bool py = peer.your_busy, pm = peer.my_busy;
    Point stay{Rational(0), Rational(0)};
    switch (peer.phase) {
      case Phase::Exc: {
        if (!py) {
          // (W,W) or (W,M): the peer has not seen us busy, so run one
          // inner step and advertise it.
          Snapshot fed;
          fed.peer_offset = s.peer_offset;
          fed.peer_color = Color{peer.light, k};
          fed.grid_oracle = s.grid_oracle;
          Decision d = inner.decide(fed);
          return Decision{d.destination_local, [d, pm, k](const Color& old) {
                            SimAColor mine = sima_decode(old, k);
                            Color inner_new = d.color_update(Color{mine.light, k});
                            if (inner_new.index < 0 || inner_new.index >= k)
                              throw std::domain_error("sim.a: inner color outside palette");
                            return sima_encode({inner_new.index, Phase::Cpy, true, pm}, k);
                          }};
        }
        if (py && !pm)  // (M,W)
          return Decision{stay, [pm, k](const Color& old) {
                            SimAColor mine = sima_decode(old, k);
                            return sima_encode({mine.light, Phase::Exc, mine.my_busy, pm}, k);
                          }};
        // (M,M)
        return Decision{stay, [k](const Color& old) {
                          SimAColor mine = sima_decode(old, k);
                          return sima_encode({mine.light, Phase::Cpy, mine.my_busy, mine.your_busy},
                                             k);
                        }};
      }
      case Phase::Cpy: {
        if (py && !pm)  // (M,W)
          return Decision{stay, [pm, k](const Color& old) {
                            SimAColor mine = sima_decode(old, k);
                            return sima_encode({mine.light, Phase::Exc, mine.my_busy, pm}, k);
                          }};
        if (!py && pm)  // (W,M)
          return Decision{stay, [pm, k](const Color& old) {
                            SimAColor mine = sima_decode(old, k);
                            return sima_encode({mine.light, Phase::Cpy, mine.my_busy, pm}, k);
                          }};
        if (py && pm)  // (M,M)
          return Decision{stay, [k](const Color& old) {
                            SimAColor mine = sima_decode(old, k);
                            return sima_encode({mine.light, Phase::Rst, false, false}, k);
                          }};
        throw ProtocolViolation("sim.a: observed (W,W) while the peer is in the copy phase");
      }
      case Phase::Rst:
        return Decision{stay, [k](const Color& old) {
                          SimAColor mine = sima_decode(old, k);
                          return sima_encode({mine.light, Phase::Exc, false, false}, k);
                        }};
    }
    throw std::logic_error("sim.a: bad phase");
  };
  return a;
}

// ---- projection ---------------------------------------------------------------

namespace {

struct CycleRecord {
  RobotId robot;
  int index;
  const CycleSpec* spec;
  Snapshot look;
  Point dest_local;
  Color new_color;
};

std::vector<CycleRecord> collect_cycles(const Trace& trace) {
  std::map<std::pair<int, int>, CycleRecord> by_key;
  for (const auto& ev : trace.events) {
    auto key = std::make_pair(idx(ev.robot), ev.cycle_index);
    if (ev.kind == TraceEvent::Kind::Look) {
      CycleRecord rec;
      rec.robot = ev.robot;
      rec.index = ev.cycle_index;
      rec.spec = nullptr;
      rec.look = std::get<LookEvent>(ev.payload).snapshot;
      by_key[key] = rec;
    } else if (ev.kind == TraceEvent::Kind::Compute) {
      auto& rec = by_key.at(key);
      rec.dest_local = std::get<ComputeEvent>(ev.payload).destination_local;
      rec.new_color = std::get<ComputeEvent>(ev.payload).new_color;
    }
  }
  std::vector<CycleRecord> out;
  for (auto& [key, rec] : by_key) {
    for (const auto& c : trace.schedule.cycles)
      if (c.robot == rec.robot && c.index == rec.index) rec.spec = &c;
    if (!rec.spec) throw ProtocolViolation("projection: event without a schedule cycle");
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const CycleRecord& a, const CycleRecord& b) {
    if (a.spec->t_look != b.spec->t_look) return a.spec->t_look < b.spec->t_look;
    return idx(a.robot) < idx(b.robot);
  });
  return out;
}

void group_steps(AbstractTrace& abs) {
  abs.steps.clear();
  for (size_t i = 0; i < abs.moves.size(); ++i) {
    if (!abs.steps.empty()) {
      size_t first = abs.steps.back().front();
      if (abs.moves[first].t_look == abs.moves[i].t_look &&
          abs.moves[first].robot != abs.moves[i].robot) {
        abs.steps.back().push_back(i);
        continue;
      }
    }
    abs.steps.push_back({i});
  }
}

}  // namespace

AbstractTrace project_simulator_trace(const Trace& sim_trace, SimulatorKind kind, int inner_k) {
  AbstractTrace abs;
  PerRobot<Color> composite = sim_trace.initial.colors;

  for (const auto& rec : collect_cycles(sim_trace)) {
    if (!rec.look.peer_color && kind != SimulatorKind::Collapse)
      throw ProtocolViolation("projection: simulator trace lacks peer lights");
    bool is_inner_call = false;
    Snapshot fed;
    Color inner_new{0, inner_k};

    switch (kind) {
      case SimulatorKind::Collapse: {
        is_inner_call = true;
        fed = rec.look;
        inner_new = rec.new_color;
        break;
      }
      case SimulatorKind::Handshake: {
        HsColor peer = hs_decode(*rec.look.peer_color, inner_k);
        HsColor mine_before = hs_decode(composite[rec.robot], inner_k);
        HsColor mine_after = hs_decode(rec.new_color, inner_k);
        if (peer.phase == Phase::Exc) {
          is_inner_call = true;
          fed.peer_offset = rec.look.peer_offset;
          fed.own_color = Color{peer.your_light, inner_k};
          fed.peer_color = Color{peer.my_light, inner_k};
          fed.grid_oracle = rec.look.grid_oracle;
          inner_new = Color{mine_after.my_light, inner_k};
        } else {
          // Bookkeeping turn: must not move and must not touch the
          // published inner light.
          if (!rec.dest_local.is_origin())
            throw ProtocolViolation("handshake: bookkeeping turn commanded a move");
          if (mine_after.my_light != mine_before.my_light)
            throw ProtocolViolation("handshake: bookkeeping turn changed the inner light");
        }
        break;
      }
      case SimulatorKind::SimA: {
        SimAColor peer = sima_decode(*rec.look.peer_color, inner_k);
        SimAColor mine_before = sima_decode(composite[rec.robot], inner_k);
        SimAColor mine_after = sima_decode(rec.new_color, inner_k);
        if (peer.phase == Phase::Cpy && !peer.your_busy && !peer.my_busy)
          throw ProtocolViolation("sim.a: unreachable flag pattern observed");
        if (peer.phase == Phase::Exc && !peer.your_busy) {
          is_inner_call = true;
          fed.peer_offset = rec.look.peer_offset;
          fed.peer_color = Color{peer.light, inner_k};
          fed.grid_oracle = rec.look.grid_oracle;
          inner_new = Color{mine_after.light, inner_k};
          if (!mine_after.my_busy)
            throw ProtocolViolation("sim.a: inner call did not raise the busy flag");
        } else {
          if (!rec.dest_local.is_origin())
            throw ProtocolViolation("sim.a: bookkeeping turn commanded a move");
          if (mine_after.light != mine_before.light)
            throw ProtocolViolation("sim.a: bookkeeping turn changed the inner light");
        }
        break;
      }
    }

    composite[rec.robot] = rec.new_color;
    if (is_inner_call) {
      abs.moves.push_back({rec.robot, fed, rec.dest_local, inner_new, rec.spec->t_look,
                           rec.spec->t_compute, rec.spec->t_move_begin, rec.spec->t_move_end});
    }
  }
  group_steps(abs);
  return abs;
}

Schedule induced_schedule(const AbstractTrace& abs, const Trace& sim_trace, Atomicity declared,
                          Synchrony synchrony) {
  Schedule s;
  s.atomicity = declared;
  s.synchrony = synchrony;
  s.horizon = sim_trace.horizon();
  PerRobot<int> next{{1, 1}};
  for (const auto& m : abs.moves) {
    CycleSpec c;
    c.robot = m.robot;
    c.index = next[m.robot]++;
    c.t_look = m.t_look;
    c.t_compute = m.t_compute;
    c.t_move_begin = m.t_move_begin;
    c.t_move_end = m.t_move_end;
    s.cycles.push_back(c);
  }
  std::stable_sort(s.cycles.begin(), s.cycles.end(), [](const CycleSpec& a, const CycleSpec& b) {
    if (a.t_look != b.t_look) return a.t_look < b.t_look;
    return idx(a.robot) < idx(b.robot);
  });
  return s;
}

int distinct_colors_used(const Trace& trace) {
  std::set<int> seen{trace.initial.colors[RobotId::A].index,
                     trace.initial.colors[RobotId::B].index};
  for (const auto& ev : trace.events)
    if (ev.kind == TraceEvent::Kind::Compute)
      seen.insert(std::get<ComputeEvent>(ev.payload).new_color.index);
  return static_cast<int>(seen.size());
}

}  // namespace lcmsim
