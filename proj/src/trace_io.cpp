#include "lcmsim/trace_io.hpp"

#include <fstream>
#include <sstream>

namespace lcmsim {

namespace {

constexpr const char* kMagic = "lcmsim-trace v1";

RobotId parse_robot(const std::string& s) {
  if (s == "A") return RobotId::A;
  if (s == "B") return RobotId::B;
  throw std::invalid_argument("trace: bad robot id '" + s + "'");
}

std::string opt_color(const std::optional<Color>& c) {
  return c ? std::to_string(c->index) : "-";
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string serialize_frame(const FrameChoice& frame) {
  switch (frame.kind) {
    case FrameChoice::Kind::Canonical: return "canonical";
    case FrameChoice::Kind::Global: return "global";
    case FrameChoice::Kind::Scaled: return "scale:" + frame.scale.str();
  }
  return "canonical";
}

FrameChoice parse_frame(const std::string& s) {
  if (s == "canonical") return FrameChoice::canonical();
  if (s == "global") return FrameChoice::global();
  if (s.rfind("scale:", 0) == 0) return FrameChoice::scaled(Rational::parse(s.substr(6)));
  throw std::invalid_argument("trace: bad frame '" + s + "'");
}

std::string serialize_profile(const ProgressProfile& p) {
  if (p.is_linear()) return "linear";
  std::string out = "pins:";
  for (size_t i = 0; i < p.knots.size(); ++i) {
    if (i) out += ",";
    out += p.knots[i].t.str() + "=" + p.knots[i].f.str();
  }
  return out;
}

ProgressProfile parse_profile(const std::string& s) {
  if (s == "linear") return ProgressProfile::linear();
  if (s.rfind("pins:", 0) != 0) throw std::invalid_argument("trace: bad profile '" + s + "'");
  ProgressProfile p;
  std::istringstream is(s.substr(5));
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("trace: bad profile knot '" + item + "'");
    p.knots.push_back({Rational::parse(item.substr(0, eq)), Rational::parse(item.substr(eq + 1))});
  }
  return p;
}

std::string serialize_trace(const Trace& trace) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "scenario " << (trace.scenario_text.empty() ? "-" : trace.scenario_text) << "\n";
  os << "model " << model_name(trace.model) << "\n";
  os << "grid " << (trace.grid_granted ? 1 : 0) << "\n";
  os << "palette " << trace.palette << "\n";
  os << "atomicity " << atomicity_name(trace.schedule.atomicity) << "\n";
  os << "synchrony " << synchrony_name(trace.schedule.synchrony) << "\n";
  os << "horizon " << trace.schedule.horizon.str() << "\n";
  os << "init " << trace.initial.positions[RobotId::A].x.str() << " "
     << trace.initial.positions[RobotId::A].y.str() << " "
     << trace.initial.positions[RobotId::B].x.str() << " "
     << trace.initial.positions[RobotId::B].y.str() << " "
     << trace.initial.colors[RobotId::A].index << " " << trace.initial.colors[RobotId::B].index
     << "\n";
  os << "cycles " << trace.schedule.cycles.size() << "\n";
  for (const auto& c : trace.schedule.cycles) {
    os << "cycle " << name(c.robot) << " " << c.index << " " << c.t_look.str() << " "
       << c.t_compute.str() << " " << c.t_move_begin.str() << " " << c.t_move_end.str() << " "
       << serialize_frame(c.frame) << " " << serialize_profile(c.profile) << "\n";
  }
  os << "events " << trace.events.size() << "\n";
  for (const auto& ev : trace.events) {
    switch (ev.kind) {
      case TraceEvent::Kind::Look: {
        const auto& look = std::get<LookEvent>(ev.payload);
        os << "look " << ev.time.str() << " " << name(ev.robot) << " " << ev.cycle_index << " "
           << look.snapshot.peer_offset.x.str() << " " << look.snapshot.peer_offset.y.str() << " "
           << opt_color(look.snapshot.own_color) << " " << opt_color(look.snapshot.peer_color)
           << " ";
        if (look.snapshot.grid_oracle)
          os << look.snapshot.grid_oracle->x.str() << " " << look.snapshot.grid_oracle->y.str();
        else
          os << "- -";
        os << "\n";
        break;
      }
      case TraceEvent::Kind::Compute: {
        const auto& c = std::get<ComputeEvent>(ev.payload);
        os << "compute " << ev.time.str() << " " << name(ev.robot) << " " << ev.cycle_index << " "
           << c.destination_local.x.str() << " " << c.destination_local.y.str() << " "
           << c.new_color.index << "\n";
        break;
      }
      case TraceEvent::Kind::MoveBegin: {
        const auto& m = std::get<MoveBeginEvent>(ev.payload);
        os << "movebegin " << ev.time.str() << " " << name(ev.robot) << " " << ev.cycle_index
           << " " << m.from.x.str() << " " << m.from.y.str() << " " << m.to.x.str() << " "
           << m.to.y.str() << "\n";
        break;
      }
      case TraceEvent::Kind::MoveEnd: {
        const auto& m = std::get<MoveEndEvent>(ev.payload);
        os << "moveend " << ev.time.str() << " " << name(ev.robot) << " " << ev.cycle_index << " "
           << m.at.x.str() << " " << m.at.y.str() << "\n";
        break;
      }
    }
  }
  return os.str();
}

Trace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw std::invalid_argument(std::string("trace: missing ") + what);
    return line;
  };
  if (next_line("magic") != kMagic) throw std::invalid_argument("trace: bad magic line");

  Trace trace;
  next_line("scenario");
  if (line.rfind("scenario ", 0) != 0) throw std::invalid_argument("trace: missing scenario");
  trace.scenario_text = line.substr(9) == "-" ? "" : line.substr(9);

  auto field = [&](const char* key) {
    next_line(key);
    std::string prefix = std::string(key) + " ";
    if (line.rfind(prefix, 0) != 0)
      throw std::invalid_argument(std::string("trace: expected '") + key + "' line");
    return line.substr(prefix.size());
  };

  trace.model = parse_model(field("model"));
  trace.grid_granted = field("grid") == "1";
  trace.palette = std::stoi(field("palette"));
  trace.schedule.atomicity = parse_atomicity(field("atomicity"));
  trace.schedule.synchrony = parse_synchrony(field("synchrony"));
  trace.schedule.horizon = Rational::parse(field("horizon"));

  auto init_tok = split_ws(field("init"));
  if (init_tok.size() != 6) throw std::invalid_argument("trace: bad init line");
  trace.initial.positions[RobotId::A] = {Rational::parse(init_tok[0]), Rational::parse(init_tok[1])};
  trace.initial.positions[RobotId::B] = {Rational::parse(init_tok[2]), Rational::parse(init_tok[3])};
  trace.initial.colors[RobotId::A] = {std::stoi(init_tok[4]), trace.palette};
  trace.initial.colors[RobotId::B] = {std::stoi(init_tok[5]), trace.palette};

  int n_cycles = std::stoi(field("cycles"));
  for (int i = 0; i < n_cycles; ++i) {
    auto tok = split_ws(next_line("cycle"));
    if (tok.size() != 9 || tok[0] != "cycle") throw std::invalid_argument("trace: bad cycle line");
    CycleSpec c;
    c.robot = parse_robot(tok[1]);
    c.index = std::stoi(tok[2]);
    c.t_look = Rational::parse(tok[3]);
    c.t_compute = Rational::parse(tok[4]);
    c.t_move_begin = Rational::parse(tok[5]);
    c.t_move_end = Rational::parse(tok[6]);
    c.frame = parse_frame(tok[7]);
    c.profile = parse_profile(tok[8]);
    trace.schedule.cycles.push_back(c);
  }

  int n_events = std::stoi(field("events"));
  auto opt_color_of = [&](const std::string& s) -> std::optional<Color> {
    if (s == "-") return std::nullopt;
    return Color{std::stoi(s), trace.palette};
  };
  for (int i = 0; i < n_events; ++i) {
    auto tok = split_ws(next_line("event"));
    if (tok.size() < 5) throw std::invalid_argument("trace: bad event line");
    TraceEvent ev;
    ev.time = Rational::parse(tok[1]);
    ev.robot = parse_robot(tok[2]);
    ev.cycle_index = std::stoi(tok[3]);
    if (tok[0] == "look") {
      if (tok.size() != 10) throw std::invalid_argument("trace: bad look line");
      ev.kind = TraceEvent::Kind::Look;
      Snapshot snap;
      snap.peer_offset = {Rational::parse(tok[4]), Rational::parse(tok[5])};
      snap.own_color = opt_color_of(tok[6]);
      snap.peer_color = opt_color_of(tok[7]);
      if (tok[8] != "-") snap.grid_oracle = Point{Rational::parse(tok[8]), Rational::parse(tok[9])};
      ev.payload = LookEvent{snap};
    } else if (tok[0] == "compute") {
      if (tok.size() != 7) throw std::invalid_argument("trace: bad compute line");
      ev.kind = TraceEvent::Kind::Compute;
      ev.payload = ComputeEvent{{Rational::parse(tok[4]), Rational::parse(tok[5])},
                                Color{std::stoi(tok[6]), trace.palette}};
    } else if (tok[0] == "movebegin") {
      if (tok.size() != 9) throw std::invalid_argument("trace: bad movebegin line");
      ev.kind = TraceEvent::Kind::MoveBegin;
      ev.payload = MoveBeginEvent{{Rational::parse(tok[4]), Rational::parse(tok[5])},
                                  {Rational::parse(tok[6]), Rational::parse(tok[7])}};
    } else if (tok[0] == "moveend") {
      if (tok.size() != 6) throw std::invalid_argument("trace: bad moveend line");
      ev.kind = TraceEvent::Kind::MoveEnd;
      ev.payload = MoveEndEvent{{Rational::parse(tok[4]), Rational::parse(tok[5])}};
    } else {
      throw std::invalid_argument("trace: unknown event kind '" + tok[0] + "'");
    }
    trace.events.push_back(ev);
  }

  // Rebuild the motion plan from move-begin records and cycle specs.
  for (const auto& ev : trace.events) {
    if (ev.kind != TraceEvent::Kind::MoveBegin) continue;
    const auto& m = std::get<MoveBeginEvent>(ev.payload);
    const CycleSpec* spec = nullptr;
    for (const auto& c : trace.schedule.cycles)
      if (c.robot == ev.robot && c.index == ev.cycle_index) spec = &c;
    if (!spec) throw std::invalid_argument("trace: move event without a cycle");
    trace.motion[ev.robot].push_back(
        {spec->t_move_begin, spec->t_move_end, m.from, m.to, spec->profile, spec->index});
  }
  for (RobotId r : {RobotId::A, RobotId::B})
    std::sort(trace.motion[r].begin(), trace.motion[r].end(),
              [](const MotionSegment& a, const MotionSegment& b) { return a.t_begin < b.t_begin; });
  return trace;
}

void save_trace(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << serialize_trace(trace);
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_trace(ss.str());
}

}  // namespace lcmsim
