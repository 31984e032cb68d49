#include "lcmsim/model.hpp"

#include <stdexcept>

namespace lcmsim {

RobotModel parse_model(const std::string& s) {
  if (s == "OBLOT") return RobotModel::OBLOT;
  if (s == "FSTA") return RobotModel::FSTA;
  if (s == "FCOM") return RobotModel::FCOM;
  if (s == "LUMI") return RobotModel::LUMI;
  throw std::invalid_argument("unknown robot model: " + s);
}

const char* model_name(RobotModel m) {
  switch (m) {
    case RobotModel::OBLOT: return "OBLOT";
    case RobotModel::FSTA: return "FSTA";
    case RobotModel::FCOM: return "FCOM";
    case RobotModel::LUMI: return "LUMI";
  }
  return "?";
}

Point canonical_observation(const Point& offset, const FrameChoice& frame) {
  if (offset.is_origin()) return offset;
  switch (frame.kind) {
    case FrameChoice::Kind::Global:
      return offset;
    case FrameChoice::Kind::Canonical:
      return {Rational(0), Rational(1)};
    case FrameChoice::Kind::Scaled: {
      if (frame.scale <= Rational(0))
        throw std::domain_error("FrameChoice: scale must be positive");
      // Peer goes on the positive local y-axis. When the true length is
      // rational the scaled length is exact; otherwise the adversary's
      // scale absorbs it and the observation is the unit form.
      auto len = sqrt_exact(norm2(offset));
      if (len) return {Rational(0), frame.scale * *len};
      return {Rational(0), Rational(1)};
    }
  }
  return offset;
}

Snapshot build_snapshot(const PerRobot<Point>& positions, const PerRobot<Color>& colors,
                        RobotId observer, RobotModel model, const FrameChoice& frame,
                        bool grid_granted) {
  RobotId other = peer_of(observer);
  Snapshot snap;
  snap.peer_offset = canonical_observation(positions[other] - positions[observer], frame);
  if (sees_own_color(model)) snap.own_color = colors[observer];
  if (sees_peer_color(model)) snap.peer_color = colors[other];
  if (grid_granted) snap.grid_oracle = positions[observer];
  return snap;
}

Point local_to_global(const Point& destination_local, const FrameChoice& frame,
                      const Point& own, const Point& offset) {
  if (frame.kind == FrameChoice::Kind::Global) return own + destination_local;
  if (offset.is_origin()) {
    if (destination_local.is_origin()) return own;
    throw std::domain_error(
        "local_to_global: coincident robots define no direction for a nonzero destination");
  }
  // The peer sits at local (0, s); a local point (x, y) is
  // own + (x/s) * n + (y/s) * offset with n the clockwise normal.
  Point seen = canonical_observation(offset, frame);
  const Rational& s = seen.y;
  Rational alpha = destination_local.x / s;
  Rational beta = destination_local.y / s;
  Point normal{offset.y, -offset.x};
  return own + alpha * normal + beta * offset;
}

}  // namespace lcmsim
