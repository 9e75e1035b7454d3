#pragma once

#include <string>

#include "brauer/cap.hpp"
#include "brauer/weight.hpp"

namespace brauer {

std::string weight_text(const WeightDiagram& x, int width = 0);
// Labels on one line, arcs drawn beneath, one line per nesting level.
std::string cap_text(const CapDiagram& c);
// Plain SVG 1.1; the wall is the y-axis and arcs are quadratic Beziers.
std::string cap_svg(const CapDiagram& c);

}  // namespace brauer
