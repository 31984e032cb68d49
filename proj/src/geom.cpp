#include "lcmsim/geom.hpp"

namespace lcmsim {

Point interpolate(const Point& p_begin, const Point& p_end, const Rational& s) {
  if (s < Rational(0) || s > Rational(1))
    throw std::domain_error("interpolate: fraction outside [0,1]: " + s.str());
  return p_begin + s * (p_end - p_begin);
}

}  // namespace lcmsim
