#include "tanglekit/gluing.hpp"

#include <string>

namespace tanglekit {

namespace {

// Shared scaffolding: lay two diagrams side by side in one arc arena (second
// diagram's arc ids offset by the first's count) and collect their pieces.
struct Arena {
    detail::ArcFuser uf;
    std::vector<std::array<int, 4>> crossings;

    Arena(const TangleDiagram& a, const TangleDiagram& b)
        : uf(a.n_arcs + b.n_arcs) {
        for (const Crossing& x : a.crossings)
            crossings.push_back({x.ends[0].arc, x.ends[1].arc, x.ends[2].arc, x.ends[3].arc});
        for (const Crossing& x : b.crossings)
            crossings.push_back({x.ends[0].arc + a.n_arcs, x.ends[1].arc + a.n_arcs,
                                 x.ends[2].arc + a.n_arcs, x.ends[3].arc + a.n_arcs});
    }
};

std::array<int, 4> cycle_arcs(const BoundaryCycle& c, int offset) {
    return {c.points[0].arc + offset, c.points[1].arc + offset, c.points[2].arc + offset,
            c.points[3].arc + offset};
}

} // namespace

TangleDiagram fill_hole(const TangleDiagram& t, int hole_index, const TangleDiagram& s) {
    if (hole_index < 0 || hole_index >= t.n_holes)
        throw IndexError("fill_hole: hole " + std::to_string(hole_index) + " of a diagram with " +
                         std::to_string(t.n_holes) + " holes");
    Arena arena(t, s);
    const BoundaryCycle& hole = t.holes[static_cast<size_t>(hole_index)];
    for (int i = 0; i < 4; ++i)
        arena.uf.fuse(hole.points[static_cast<size_t>(i)].arc,
                      s.outer.points[static_cast<size_t>(i)].arc + t.n_arcs);

    std::vector<std::array<int, 4>> boundaries;
    boundaries.push_back(cycle_arcs(t.outer, 0));
    for (int h = 0; h < hole_index; ++h) boundaries.push_back(cycle_arcs(t.holes[static_cast<size_t>(h)], 0));
    for (const BoundaryCycle& c : s.holes) boundaries.push_back(cycle_arcs(c, t.n_arcs));
    for (int h = hole_index + 1; h < t.n_holes; ++h)
        boundaries.push_back(cycle_arcs(t.holes[static_cast<size_t>(h)], 0));

    return detail::assemble_tangle(boundaries, arena.crossings, arena.uf,
                                   checked_add(t.free_loops, s.free_loops));
}

namespace {

TangleDiagram connect_sum(const TangleDiagram& a, const TangleDiagram& b, bool horizontal) {
    Arena arena(a, b);
    const auto& ao = a.outer.points;
    const auto& bo = b.outer.points;
    std::array<int, 4> outer;
    if (horizontal) {
        arena.uf.fuse(ao[3].arc, bo[0].arc + a.n_arcs); // a.NE to b.NW
        arena.uf.fuse(ao[2].arc, bo[1].arc + a.n_arcs); // a.SE to b.SW
        outer = {ao[0].arc, ao[1].arc, bo[2].arc + a.n_arcs, bo[3].arc + a.n_arcs};
    } else {
        arena.uf.fuse(ao[1].arc, bo[0].arc + a.n_arcs); // a.SW to b.NW
        arena.uf.fuse(ao[2].arc, bo[3].arc + a.n_arcs); // a.SE to b.NE
        outer = {ao[0].arc, bo[1].arc + a.n_arcs, bo[2].arc + a.n_arcs, ao[3].arc};
    }

    std::vector<std::array<int, 4>> boundaries;
    boundaries.push_back(outer);
    for (const BoundaryCycle& c : a.holes) boundaries.push_back(cycle_arcs(c, 0));
    for (const BoundaryCycle& c : b.holes) boundaries.push_back(cycle_arcs(c, a.n_arcs));

    return detail::assemble_tangle(boundaries, arena.crossings, arena.uf,
                                   checked_add(a.free_loops, b.free_loops));
}

} // namespace

TangleDiagram connect_h_diagram(const TangleDiagram& a, const TangleDiagram& b) {
    return connect_sum(a, b, true);
}

TangleDiagram connect_v_diagram(const TangleDiagram& a, const TangleDiagram& b) {
    return connect_sum(a, b, false);
}

} // namespace tanglekit
