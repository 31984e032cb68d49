#include "lcmsim/problems.hpp"

#include <stdexcept>

namespace lcmsim {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HOLDS: return "HOLDS";
    case Verdict::FAILS: return "FAILS";
    case Verdict::UNDECIDED: return "UNDECIDED-AT-HORIZON";
  }
  return "?";
}

std::string PredicateReport::str() const {
  std::string s = verdict_name(verdict);
  if (witness)
    s += " at t=" + witness->time.str() + " observed " + witness->observed + " expected " +
         witness->expected;
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

namespace {

PredicateReport holds(std::string note = "") { return {Verdict::HOLDS, std::nullopt, std::move(note)}; }

PredicateReport fails(Rational t, std::string observed, std::string expected) {
  return {Verdict::FAILS, Witness{std::move(t), std::move(observed), std::move(expected)}, ""};
}

PredicateReport undecided(std::string note) { return {Verdict::UNDECIDED, std::nullopt, std::move(note)}; }

struct StopConfig {
  Rational t;
  Point a, b;
};

std::vector<StopConfig> stop_configs(const Trace& trace) {
  std::vector<StopConfig> out;
  for (const auto& s : joint_stops(trace)) {
    Rational t = s.representative();
    out.push_back({t, position_at(trace, RobotId::A, t), position_at(trace, RobotId::B, t)});
  }
  return out;
}

}  // namespace

PredicateReport check_dmsd(const Trace& trace) {
  Rational d0_sq = dist2(trace.initial.positions[RobotId::A], trace.initial.positions[RobotId::B]);
  if (d0_sq.is_zero()) throw std::domain_error("check_dmsd: initial distance is zero");
  for (const auto& cfg : stop_configs(trace)) {
    Rational ratio_sq = dist2(cfg.a, cfg.b) / d0_sq;
    auto root = sqrt_exact(ratio_sq);
    if (!root)
      return fails(cfg.t, "squared ratio " + ratio_sq.str(),
                   "square of a dyadic rational (ratio is irrational)");
    if (!root->is_dyadic())
      return fails(cfg.t, "ratio " + root->str(), "a dyadic rational m/2^k");
  }
  return holds();
}

PredicateReport check_rdv1(const Trace& trace) {
  const Rational& h = trace.horizon();
  Point a = position_at(trace, RobotId::A, h);
  Point b = position_at(trace, RobotId::B, h);
  int ma = moves_count(trace, RobotId::A);
  int mb = moves_count(trace, RobotId::B);
  if (a != b)
    return fails(h, "final positions " + a.str() + " and " + b.str(), "a common final point");
  if (ma != 1 || mb != 1)
    return fails(h, "moves " + std::to_string(ma) + "," + std::to_string(mb), "exactly 1 each");
  return holds();
}

PredicateReport check_am(const Trace& trace) {
  // A finished trace leaves each robot stationary from its last move
  // end through the horizon, so the stopped clause reduces to counts.
  int ma = moves_count(trace, RobotId::A);
  int mb = moves_count(trace, RobotId::B);
  if ((ma >= 2 && mb <= 1) || (mb >= 2 && ma <= 1)) return holds();
  return fails(trace.horizon(), "moves " + std::to_string(ma) + "," + std::to_string(mb),
               "one >= 2 while the other <= 1 and stopped");
}

PredicateReport check_rdam(const Trace& trace) {
  PredicateReport rdv = check_rdv1(trace);
  if (rdv.verdict == Verdict::HOLDS) return holds("RDV1 branch");
  PredicateReport am = check_am(trace);
  if (am.verdict == Verdict::HOLDS) return holds("AM branch");
  PredicateReport out = am.witness ? am : rdv;
  out.verdict = Verdict::FAILS;
  out.note = "neither RDV1 nor AM";
  return out;
}

PredicateReport check_sm(const Trace& trace) {
  if (trace.initial.positions[RobotId::A] == trace.initial.positions[RobotId::B])
    throw std::domain_error("check_sm: initial positions must be distinct");
  for (RobotId r : {RobotId::A, RobotId::B}) {
    auto intervals = motion_intervals(trace, r);
    if (intervals.size() != 1)
      return fails(intervals.size() > 1 ? intervals[1].first : trace.horizon(),
                   std::string(name(r)) + " moves " + std::to_string(intervals.size()),
                   "exactly one move");
    Point end = position_at(trace, r, trace.horizon());
    if (end == trace.initial.positions[r])
      return fails(trace.horizon(), std::string(name(r)) + " back at its start",
                   "a different final location");
  }
  return holds();
}

PredicateReport check_mcv(const Trace& trace, const Rational& eps) {
  if (eps <= Rational(0)) throw std::domain_error("check_mcv: eps must be positive");
  Rational d0_sq = dist2(trace.initial.positions[RobotId::A], trace.initial.positions[RobotId::B]);

  // Breakpoints where either robot's motion can change direction or
  // speed; between consecutive ones both positions are affine in t.
  std::vector<Rational> ts{Rational(0), trace.horizon()};
  for (RobotId r : {RobotId::A, RobotId::B})
    for (const auto& seg : trace.motion[r])
      for (const auto& k : seg.profile.full_knots(seg.t_begin, seg.t_end)) ts.push_back(k.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    const Rational& u = ts[i];
    const Rational& v = ts[i + 1];
    Point du = position_at(trace, RobotId::A, u) - position_at(trace, RobotId::B, u);
    Point dv = position_at(trace, RobotId::A, v) - position_at(trace, RobotId::B, v);
    // Squared distance along the piece is A s^2 + B s + C with s in
    // [0,1]; convex, so non-increasing iff the slope at s=1 is <= 0.
    Point diff = dv - du;
    Rational a2 = norm2(diff);
    Rational b1 = Rational(2) * dot(du, diff);
    if (Rational(2) * a2 + b1 > Rational(0)) {
      if (norm2(dv) > norm2(du))
        return fails(v, "squared distance rose to " + norm2(dv).str() + " from " + norm2(du).str(),
                     "non-increasing distance");
      return fails(v, "distance increasing on [" + u.str() + "," + v.str() + "]",
                   "non-increasing distance");
    }
  }

  Rational final_sq =
      dist2(position_at(trace, RobotId::A, trace.horizon()), position_at(trace, RobotId::B, trace.horizon()));
  if (final_sq <= eps * eps * d0_sq) return holds();
  return undecided("monotone but final squared distance " + final_sq.str() + " above bound");
}

bool in_square_with_diagonal(const Point& z, const Point& p, const Point& q) {
  Point m = midpoint(p, q);
  Point h = q - m;
  Rational len = norm2(h);
  if (len.is_zero()) return z == m;
  Rational xi = dot(z - m, h) / len;
  Rational eta = dot(z - m, Point{h.y, -h.x}) / len;
  return xi.abs() + eta.abs() <= Rational(1);
}

namespace {

bool matches_rotation_step(const StopConfig& from, const StopConfig& to) {
  Point m = midpoint(from.a, from.b);
  Point ra = rot90cw(from.a, m);
  Point rb = rot90cw(from.b, m);
  return (to.a == ra && to.b == rb) || (to.a == rb && to.b == ra);
}

bool matches_shrink_step(const StopConfig& from, const StopConfig& to) {
  for (auto [pivot, other] : {std::pair{from.a, from.b}, std::pair{from.b, from.a}}) {
    Point image = shrink_rot45cw(other, pivot);
    if ((to.a == pivot && to.b == image) || (to.a == image && to.b == pivot)) return true;
  }
  return false;
}

}  // namespace

PredicateReport check_sro(const Trace& trace) {
  if (trace.initial.positions[RobotId::A] == trace.initial.positions[RobotId::B])
    throw std::domain_error("check_sro: initial positions must be distinct");
  auto configs = stop_configs(trace);
  for (size_t i = 0; i + 1 < configs.size(); ++i) {
    const StopConfig& from = configs[i];
    const StopConfig& to = configs[i + 1];
    bool rot = matches_rotation_step(from, to);
    bool shrink = matches_shrink_step(from, to);
    if (!rot && !shrink)
      return fails(to.t, "step " + std::to_string(i) + " is neither a quarter rotation nor a pivot shrink",
                   "rotation about the midpoint or 45-degree pivot shrink");
    if (i >= 1) {
      const StopConfig& frame = configs[i - 1];
      for (const Point& z : {to.a, to.b})
        if (!in_square_with_diagonal(z, frame.a, frame.b))
          return fails(to.t, "endpoint " + z.str() + " escapes the frame square",
                       "containment in the square two configurations back");
    }
  }
  return holds(configs.size() < 2 ? "no steps within horizon" : "");
}

PredicateReport check_cge(const Trace& trace, int steps) {
  if (steps < 1) throw std::domain_error("check_cge: steps must be >= 1");
  if (!trace.grid_granted) throw std::domain_error("check_cge: requires a gridded trace");
  Point c = midpoint(trace.initial.positions[RobotId::A], trace.initial.positions[RobotId::B]);
  auto configs = stop_configs(trace);
  for (int st = 0; st < steps; ++st) {
    if (st + 1 >= static_cast<int>(configs.size()))
      return undecided("only " + std::to_string(configs.size() ? configs.size() - 1 : 0) +
                       " steps within horizon");
    Point ea = cge_step(configs[st].a, c);
    Point eb = cge_step(configs[st].b, c);
    if (configs[st + 1].a != ea || configs[st + 1].b != eb)
      return fails(configs[st + 1].t,
                   "configuration " + configs[st + 1].a.str() + " / " + configs[st + 1].b.str(),
                   "doubling image " + ea.str() + " / " + eb.str());
  }
  return holds();
}

PredicateReport check_predicate(const std::string& id, const Trace& trace, const Rational& eps,
                                int steps) {
  if (id == "dmsd") return check_dmsd(trace);
  if (id == "rdv1") return check_rdv1(trace);
  if (id == "am") return check_am(trace);
  if (id == "rdam") return check_rdam(trace);
  if (id == "sm") return check_sm(trace);
  if (id == "mcv") return check_mcv(trace, eps);
  if (id == "sro") return check_sro(trace);
  if (id == "cge") return check_cge(trace, steps);
  throw std::invalid_argument("unknown predicate: " + id);
}

}  // namespace lcmsim
