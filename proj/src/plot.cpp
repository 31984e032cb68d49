#include "lcmsim/plot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lcmsim {

namespace {

struct Box {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  void grow(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
};

}  // namespace

std::string render_svg(const Trace& trace, bool with_squares) {
  constexpr double kSize = 640.0;
  std::vector<std::vector<std::pair<double, double>>> paths(2);
  for (RobotId r : {RobotId::A, RobotId::B}) {
    auto& path = paths[idx(r)];
    Point p = trace.initial.positions[r];
    path.emplace_back(p.x.to_double(), p.y.to_double());
    for (const auto& seg : trace.motion[r])
      path.emplace_back(seg.to.x.to_double(), seg.to.y.to_double());
  }

  std::vector<std::pair<Point, Point>> stops;
  for (const auto& s : joint_stops(trace)) {
    Rational t = s.representative();
    stops.emplace_back(position_at(trace, RobotId::A, t), position_at(trace, RobotId::B, t));
  }

  Box box;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      box = {x, y, x, y};
      first = false;
    } else {
      box.grow(x, y);
    }
  };
  for (const auto& path : paths)
    for (auto [x, y] : path) grow(x, y);
  for (const auto& [a, b] : stops) {
    // Square corners can stick out beyond the trajectories.
    Point m = midpoint(a, b);
    for (const Point& z : {a, b, rot90cw(a, m), rot90cw(b, m)}) grow(z.x.to_double(), z.y.to_double());
  }

  double span = std::max({box.max_x - box.min_x, box.max_y - box.min_y, 1e-9});
  double pad = span * 0.08;
  double scale = kSize / (span + 2 * pad);
  auto sx = [&](double x) { return (x - box.min_x + pad) * scale; };
  auto sy = [&](double y) { return kSize - (y - box.min_y + pad) * scale; };  // y grows upward

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (with_squares) {
    for (const auto& [a, b] : stops) {
      Point m = midpoint(a, b);
      Point c1 = rot90cw(a, m), c2 = rot90cw(b, m);
      os << "<polygon points=\"" << sx(a.x.to_double()) << "," << sy(a.y.to_double()) << " "
         << sx(c1.x.to_double()) << "," << sy(c1.y.to_double()) << " " << sx(b.x.to_double())
         << "," << sy(b.y.to_double()) << " " << sx(c2.x.to_double()) << ","
         << sy(c2.y.to_double())
         << "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";
    }
  }

  const char* colors[2] = {"#1f77b4", "#d62728"};
  for (int r = 0; r < 2; ++r) {
    if (paths[r].size() > 1) {
      os << "<polyline fill=\"none\" stroke=\"" << colors[r] << "\" stroke-width=\"1.5\" points=\"";
      for (auto [x, y] : paths[r]) os << sx(x) << "," << sy(y) << " ";
      os << "\"/>\n";
    }
    os << "<circle cx=\"" << sx(paths[r].front().first) << "\" cy=\"" << sy(paths[r].front().second)
       << "\" r=\"5\" fill=\"" << colors[r] << "\"/>\n";
  }
  for (const auto& [a, b] : stops) {
    os << "<circle cx=\"" << sx(a.x.to_double()) << "\" cy=\"" << sy(a.y.to_double())
       << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
    os << "<circle cx=\"" << sx(b.x.to_double()) << "\" cy=\"" << sy(b.y.to_double())
       << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void save_svg(const Trace& trace, const std::string& path, bool with_squares) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write svg file: " + path);
  out << render_svg(trace, with_squares);
}

}  // namespace lcmsim
