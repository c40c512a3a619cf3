#pragma once

#include <array>
#include <string>
#include <vector>

#include "tanglekit/errors.hpp"

// Combinatorial model of n-punctured ball tangle diagrams.
//
// A diagram is a 4-valent planar code: crossings and boundary circles
// (one outer boundary plus n holes) whose attachment points are joined
// pairwise by arcs. Arcs are dense integer ids; each id occurs exactly
// twice. Crossing-free closed circles are kept as a count (free_loops).
//
// Conventions (each pinned by a calibration test, not by pictures):
//   * Boundary points are stored counterclockwise with index 0 = NW, so
//     the stored order is (NW, SW, SE, NE).
//   * Hole boundary tuples are stored in the filler's frame: hole point i
//     is the point that a filling tangle's outer point i attaches to.
//   * Crossing tuples are PD-style: counterclockwise from an incoming
//     under-strand end, so strand 0-2 is under and 1-3 is over.

namespace tanglekit {

enum Corner : int { NW = 0, SW = 1, SE = 2, NE = 3 };

struct ArcEnd {
    int arc = 0;  // arc id, 0-based
    int slot = 0; // which of the arc's two ends (0 or 1), by first appearance

    friend bool operator==(const ArcEnd& a, const ArcEnd& b) {
        return a.arc == b.arc && a.slot == b.slot;
    }
};

struct Crossing {
    std::array<ArcEnd, 4> ends;
};

struct BoundaryCycle {
    std::vector<ArcEnd> points; // always 4 in a valid diagram
};

struct TangleDiagram {
    int n_holes = 0;
    BoundaryCycle outer;
    std::vector<BoundaryCycle> holes;
    std::vector<Crossing> crossings;
    i64 free_loops = 0;
    int n_arcs = 0;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    i64 free_loops = 0;
    int n_arcs = 0;
};

// -- text format -----------------------------------------------------------
//
//   tangle
//   holes <n>
//   loops <m>
//   outer <a0> <a1> <a2> <a3>
//   hole <a0> <a1> <a2> <a3>     (n lines)
//   X <a> <b> <c> <d>            (one per crossing)
//
// '#' starts a comment, blank lines are ignored, labels are [A-Za-z0-9_]+.
// A file with `holes 0` and no `outer` line denotes a closed link.

TangleDiagram parse_tangle(const std::string& text);
LinkDiagram parse_link(const std::string& text);

// Either form, for front ends that accept both.
struct ParsedDiagram {
    bool is_link = false;
    TangleDiagram tangle; // valid when !is_link
    LinkDiagram link;     // valid when is_link
};
ParsedDiagram parse_any(const std::string& text);

// Canonical text: fixed section order, arcs relabeled "0","1",... in order
// of first appearance. parse(serialize(d)) == serialize-relabeled d.
std::string serialize_tangle(const TangleDiagram& d);
std::string serialize_link(const LinkDiagram& d);

// -- validation ------------------------------------------------------------

enum class ViolationKind { Degree, Arity, Structure };

struct Violation {
    ViolationKind kind;
    std::string message;
};

const char* to_string(ViolationKind k);

// All invariant violations, not just the first. Empty result means valid.
std::vector<Violation> validate(const TangleDiagram& d);
std::vector<Violation> validate(const LinkDiagram& d);

// -- builders --------------------------------------------------------------

// The two crossingless ball tangles: j=1 joins NW-SW and NE-SE (vertical
// strands, invariant [1,0]^T), j=2 joins NW-NE and SW-SE (horizontal,
// invariant [0,1]^T).
TangleDiagram fundamental(int j);

// Horizontal twist region with |p| crossings; calibrated so the downstream
// invariant is [p,1]^T. twist(0) == fundamental(2); twist(1) is the single
// positive crossing; negative p mirrors every crossing.
TangleDiagram twist(i64 p);

// One hole, four radial arcs joining outer point i to hole point i;
// downstream invariant [[1,0],[0,1]].
TangleDiagram identity_spherical();

// -- shared low-level machinery (used by the bracket and gluing code) ------

namespace detail {

// Union-find over arcs with closed-loop detection. fuse(a,b) joins two open
// strand ends; when both ends belong to the same strand the strand closes
// into a crossing-free circle (counted in loops) -- this is sound because a
// strand's interior junctions are all previously fused sites, so a strand
// whose two remaining ends meet has no other attachments left.
struct ArcFuser {
    std::vector<int> parent;
    i64 loops = 0;

    explicit ArcFuser(int n_arcs);
    int find(int a);
    void fuse(int a, int b);
};

// Rebuild dense arc ids and end slots after fusing. Sections are walked in
// reading order (boundaries first, then crossings); every surviving arc must
// occur exactly twice or the gluing logic itself is broken.
TangleDiagram assemble_tangle(const std::vector<std::array<int, 4>>& boundaries,
                              const std::vector<std::array<int, 4>>& crossings,
                              ArcFuser& uf, i64 free_loops);
LinkDiagram assemble_link(const std::vector<std::array<int, 4>>& crossings,
                          ArcFuser& uf, i64 free_loops);

} // namespace detail

} // namespace tanglekit
