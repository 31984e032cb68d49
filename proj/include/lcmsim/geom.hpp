#pragma once

#include "lcmsim/rational.hpp"

namespace lcmsim {

struct Point {
  Rational x;
  Rational y;

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
  Point operator-() const { return {-x, -y}; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  bool is_origin() const { return x.is_zero() && y.is_zero(); }
  std::string str() const { return x.str() + "," + y.str(); }
};

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// Squared Euclidean length; raw distances are never materialized.
inline Rational norm2(const Point& p) { return p.x * p.x + p.y * p.y; }

inline Rational dist2(const Point& a, const Point& b) { return norm2(a - b); }

inline Point midpoint(const Point& p, const Point& q) {
  Rational half(1, 2);
  return {half * (p.x + q.x), half * (p.y + q.y)};
}

/// pB + s * (pE - pB) for s in [0,1]; rejects s outside the move.
Point interpolate(const Point& p_begin, const Point& p_end, const Rational& s);

/// 90-degree clockwise rotation about `center`; with v = p - center the
/// image is center + (v.y, -v.x). Chirality is fixed engine-wide by this
/// convention. Preserves squared distance from center exactly.
inline Point rot90cw(const Point& p, const Point& center) {
  Point v = p - center;
  return {center.x + v.y, center.y - v.x};
}

/// Rational matrix (I + R)/2 applied about `pivot`: a 45-degree clockwise
/// rotation combined with shrink, so squared length exactly halves.
inline Point shrink_rot45cw(const Point& p, const Point& pivot) {
  Point v = p - pivot;
  Rational half(1, 2);
  return {pivot.x + half * (v.x + v.y), pivot.y + half * (v.y - v.x)};
}

/// Coordinate-wise floor(2*p - c), the doubling step away from c.
inline Point cge_step(const Point& p, const Point& c) {
  Rational two(2);
  Rational fx(Rational(two * p.x - c.x).floor(), mpz_class(1));
  Rational fy(Rational(two * p.y - c.y).floor(), mpz_class(1));
  return {fx, fy};
}

}  // namespace lcmsim
