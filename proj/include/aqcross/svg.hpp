#pragma once
// Deterministic SVG renderings: a single arc diagram (spine on a horizontal
// axis, semicircular arcs above/below), and the black part of the global
// layout (eight vertical columns plus the straight inter-column edges).
// Vertices are labeled with their decimal ids.

#include <iosfwd>

#include "aqcross/arcdiagram.hpp"
#include "aqcross/blacklayout.hpp"

namespace aqcross {

void write_upsilon_svg(std::ostream& os, const ArcDiagram& d);
void write_black_svg(std::ostream& os, const BlackLayout& layout);

}  // namespace aqcross
