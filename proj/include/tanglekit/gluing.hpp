#pragma once

#include "tanglekit/diagram.hpp"

// Diagram surgery: plugging one tangle into a hole of another, and the two
// connected sums along the outer boundary. Hole numbering after a fill keeps
// operadic order: the filler's holes replace the filled hole in place.

namespace tanglekit {

TangleDiagram fill_hole(const TangleDiagram& t, int hole_index, const TangleDiagram& s);

// Side by side: a's east edge meets b's west edge. New outer boundary is
// (a.NW, a.SW, b.SE, b.NE); holes of a come first.
TangleDiagram connect_h_diagram(const TangleDiagram& a, const TangleDiagram& b);

// Stacked: a's south edge meets b's north edge. New outer boundary is
// (a.NW, b.SW, b.SE, a.NE); holes of a come first.
TangleDiagram connect_v_diagram(const TangleDiagram& a, const TangleDiagram& b);

} // namespace tanglekit
