#pragma once

#include <string>

#include "arrangement.hpp"

namespace polylab {

/// Display-only SVG of a rational line arrangement: exact singular points set
/// the viewport, lines are clipped to it, and rationals become doubles at the
/// very last step. Finite fields are rejected (not orderable).
std::string render_svg(const Arrangement& lines);

}  // namespace polylab
