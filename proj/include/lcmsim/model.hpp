#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "lcmsim/geom.hpp"

namespace lcmsim {

enum class RobotId { A = 0, B = 1 };

inline RobotId peer_of(RobotId r) { return r == RobotId::A ? RobotId::B : RobotId::A; }
inline int idx(RobotId r) { return static_cast<int>(r); }
inline const char* name(RobotId r) { return r == RobotId::A ? "A" : "B"; }

/// Per-robot container indexed by RobotId.
template <typename T>
struct PerRobot {
  std::array<T, 2> v;
  T& operator[](RobotId r) { return v[idx(r)]; }
  const T& operator[](RobotId r) const { return v[idx(r)]; }
};

/// A light value: index into a palette of `palette` colors.
struct Color {
  int index = 0;
  int palette = 1;

  friend bool operator==(const Color& a, const Color& b) { return a.index == b.index; }
  friend bool operator!=(const Color& a, const Color& b) { return a.index != b.index; }
};

/// Visibility rule of the four robot models. FSTA sees only its own
/// light, FCOM only the peer's, LUMI both, OBLOT neither.
enum class RobotModel { OBLOT, FSTA, FCOM, LUMI };

inline bool sees_own_color(RobotModel m) { return m == RobotModel::FSTA || m == RobotModel::LUMI; }
inline bool sees_peer_color(RobotModel m) { return m == RobotModel::FCOM || m == RobotModel::LUMI; }

RobotModel parse_model(const std::string& s);
const char* model_name(RobotModel m);

/// The observer's local frame for one Look, chosen by the adversary.
///
/// Canonical (the default) rotates and scales so the peer appears at
/// (0,1) regardless of the true distance. Scaled keeps the peer on the
/// positive local y-axis at scale * |offset| when that length is a
/// rational number, and degrades to (0,1) otherwise (the scale freedom
/// absorbs the irrational length). Global is the shared-grid frame:
/// no rotation, no scaling; only granted by gridded scenarios.
struct FrameChoice {
  enum class Kind { Canonical, Scaled, Global };
  Kind kind = Kind::Canonical;
  Rational scale = Rational(1);  // used by Scaled only; must be > 0

  static FrameChoice canonical() { return {}; }
  static FrameChoice scaled(Rational s) { return {Kind::Scaled, std::move(s)}; }
  static FrameChoice global() { return {Kind::Global, Rational(1)}; }

  friend bool operator==(const FrameChoice& a, const FrameChoice& b) {
    return a.kind == b.kind && (a.kind != Kind::Scaled || a.scale == b.scale);
  }
};

/// What one robot sees at a Look: the peer's position in the local
/// frame, the colors its model lets it read, and (in gridded scenarios
/// only) its own global position.
struct Snapshot {
  Point peer_offset;
  std::optional<Color> own_color;
  std::optional<Color> peer_color;
  std::optional<Point> grid_oracle;
};

/// Output of one Compute: a destination in the local frame of the
/// matching Look, plus the light update. The update is a function of
/// the robot's current color so that multi-register lights can leave
/// hidden components untouched; it must never branch on its argument,
/// only preserve parts of it.
struct Decision {
  Point destination_local;
  std::function<Color(const Color&)> color_update;

  static Decision stay_keep_color() {
    return {Point{Rational(0), Rational(0)}, [](const Color& c) { return c; }};
  }
  static Decision move_set_color(Point dest, Color c) {
    return {std::move(dest), [c](const Color&) { return c; }};
  }
  static Decision move_keep_color(Point dest) {
    return {std::move(dest), [](const Color& c) { return c; }};
  }
};

/// A deterministic robot program: a pure, total decision rule plus its
/// palette. Identical for both robots.
struct Algorithm {
  std::string id;
  int palette = 1;
  Color initial_color{0, 1};
  std::function<Decision(const Snapshot&)> decide;
};

/// Peer position as seen through `frame`. Zero offset (coincident
/// robots) is always observed as (0,0).
Point canonical_observation(const Point& true_peer_offset_global, const FrameChoice& frame);

/// Assembles the snapshot for `observer`, filtering colors per the
/// model's visibility rule. No multiplicity detection: a shared point
/// observes peer_offset (0,0).
Snapshot build_snapshot(const PerRobot<Point>& global_positions,
                        const PerRobot<Color>& global_colors, RobotId observer,
                        RobotModel model, const FrameChoice& frame, bool grid_granted);

/// Maps a local destination back to global coordinates through the
/// inverse of the frame used at the matching Look. Everything stays
/// rational: the destination is expressed in the basis {peer offset,
/// its 90-degree-clockwise normal}.
Point local_to_global(const Point& destination_local, const FrameChoice& frame,
                      const Point& own_global_pos, const Point& true_peer_offset_global);

}  // namespace lcmsim
