#pragma once

#include "lcmsim/engine.hpp"

namespace lcmsim {

/// Renders both trajectories (polylines through the move endpoints),
/// the joint-stop configurations as dots and, when requested, the
/// square frames spanned by consecutive stop configurations. Purely
/// informational; rationals become doubles only here.
std::string render_svg(const Trace& trace, bool with_squares = false);

void save_svg(const Trace& trace, const std::string& path, bool with_squares = false);

}  // namespace lcmsim
