#include "tanglekit/random_tangle.hpp"

#include "tanglekit/gluing.hpp"
#include "tanglekit/invariant.hpp"

namespace tanglekit {

namespace {

TangleDiagram gen(Rng& rng, int n_holes, int budget, int depth) {
    if (n_holes == 0) {
        if (depth <= 0 || budget == 0 || rng.one_in(3)) {
            if (budget == 0 || rng.one_in(4)) return fundamental(static_cast<int>(rng.range(1, 2)));
            i64 p = rng.range(1, std::min<i64>(3, budget));
            if (rng.one_in(2)) p = -p;
            return twist(p);
        }
        int left = static_cast<int>(rng.range(0, budget));
        TangleDiagram a = gen(rng, 0, left, depth - 1);
        TangleDiagram b = gen(rng, 0, budget - left, depth - 1);
        TangleDiagram out = rng.one_in(2) ? connect_h_diagram(a, b) : connect_v_diagram(a, b);
        if (rng.one_in(16)) out.free_loops = checked_add(out.free_loops, 1);
        return out;
    }
    if (n_holes == 1) {
        if (depth <= 0 || rng.one_in(3)) return identity_spherical();
        switch (rng.range(0, 3)) {
        case 0: { // graft a ball tangle onto the side of a spherical one
            int left = static_cast<int>(rng.range(0, budget));
            TangleDiagram s = gen(rng, 1, left, depth - 1);
            TangleDiagram b = gen(rng, 0, budget - left, depth - 1);
            bool h = rng.one_in(2);
            if (rng.one_in(2)) return h ? connect_h_diagram(s, b) : connect_v_diagram(s, b);
            return h ? connect_h_diagram(b, s) : connect_v_diagram(b, s);
        }
        case 1: { // compose two spherical tangles
            int left = static_cast<int>(rng.range(0, budget));
            TangleDiagram outer = gen(rng, 1, left, depth - 1);
            TangleDiagram inner = gen(rng, 1, budget - left, depth - 1);
            return fill_hole(outer, 0, inner);
        }
        default:
            return identity_spherical();
        }
    }
    // Two holes: either sum two spherical tangles or pad a two-hole tangle.
    int left = static_cast<int>(rng.range(0, budget));
    if (depth <= 0 || rng.one_in(2)) {
        TangleDiagram a = gen(rng, 1, left, depth - 1);
        TangleDiagram b = gen(rng, 1, budget - left, depth - 1);
        return rng.one_in(2) ? connect_h_diagram(a, b) : connect_v_diagram(a, b);
    }
    TangleDiagram two = gen(rng, 2, left, depth - 1);
    TangleDiagram pad = gen(rng, 0, budget - left, depth - 1);
    return rng.one_in(2) ? connect_h_diagram(two, pad) : connect_h_diagram(pad, two);
}

// Repeated draws until the crossing budget is respected are unnecessary: the
// generator never exceeds its budget by construction. This wrapper only adds
// the occasional cancelling-pair splice while room remains.
TangleDiagram with_pokes(Rng& rng, TangleDiagram t, int max_crossings) {
    while (static_cast<int>(t.crossings.size()) + 2 <= max_crossings && rng.one_in(4))
        t = insert_rii(t, rng);
    return t;
}

} // namespace

TangleDiagram random_ball_tangle(Rng& rng, int max_crossings) {
    if (max_crossings < 0) throw IndexError("crossing budget must be nonnegative");
    return with_pokes(rng, gen(rng, 0, max_crossings, 4), max_crossings);
}

TangleDiagram random_spherical_tangle(Rng& rng, int max_crossings) {
    if (max_crossings < 0) throw IndexError("crossing budget must be nonnegative");
    return with_pokes(rng, gen(rng, 1, max_crossings, 4), max_crossings);
}

TangleDiagram random_tangle_with_holes(Rng& rng, int n_holes, int max_crossings) {
    if (n_holes < 0 || n_holes > 2) throw IndexError("random generator covers 0, 1, or 2 holes");
    if (max_crossings < 0) throw IndexError("crossing budget must be nonnegative");
    return with_pokes(rng, gen(rng, n_holes, max_crossings, 4), max_crossings);
}

LinkDiagram random_link(Rng& rng, int max_crossings) {
    TangleDiagram t = random_ball_tangle(rng, max_crossings);
    ClosureKind kind = rng.one_in(2) ? ClosureKind::Numerator : ClosureKind::Denominator;
    LinkDiagram link = close_and_fill(t, kind, FillPattern{{}});
    if (rng.one_in(8)) link.free_loops = checked_add(link.free_loops, 1);
    return link;
}

namespace {

void extend_words(const TangleDiagram& sofar, int used, bool next_vertical, int max_crossings,
                  std::vector<TangleDiagram>& out) {
    for (int mag = 1; used + mag <= max_crossings; ++mag)
        for (int sign = 0; sign < 2; ++sign) {
            i64 p = sign ? -mag : mag;
            TangleDiagram next = next_vertical ? connect_v_diagram(sofar, twist(p))
                                               : connect_h_diagram(sofar, twist(p));
            out.push_back(next);
            extend_words(next, used + mag, !next_vertical, max_crossings, out);
        }
}

} // namespace

std::vector<TangleDiagram> twist_word_tangles(int max_crossings) {
    if (max_crossings < 0) throw IndexError("crossing budget must be nonnegative");
    std::vector<TangleDiagram> out;
    out.push_back(fundamental(1));
    out.push_back(fundamental(2));
    for (int mag = 1; mag <= max_crossings; ++mag)
        for (int sign = 0; sign < 2; ++sign) {
            i64 p = sign ? -mag : mag;
            // extend_words grows `out`, so hand it a stable copy rather than a
            // reference into the vector being grown.
            TangleDiagram seed = twist(p);
            out.push_back(seed);
            extend_words(seed, mag, true, max_crossings, out);
        }
    return out;
}

TangleDiagram insert_rii(const TangleDiagram& t, Rng& rng) {
    int target = static_cast<int>(rng.range(0, t.n_arcs - 1));
    // Two kinks of opposite handedness in series along the chosen strand.
    // Each kink multiplies every closure's bracket by a unit (A and A^7
    // respectively), so the pair cancels exactly; no new component appears
    // because the little loops stay part of the strand. Threading a separate
    // circle over the strand would instead add a component and kill the
    // bracket, and clasping two arbitrary arcs is not planar-safe.
    int u = t.n_arcs;     // stub keeping the strand's first attachment
    int v = t.n_arcs + 1; // stub keeping the second attachment
    int w = t.n_arcs + 2; // middle piece between the kinks
    int loop1 = t.n_arcs + 3;
    int loop2 = t.n_arcs + 4;

    detail::ArcFuser uf(t.n_arcs + 5);
    auto remap = [&](const ArcEnd& e) { return e.arc == target ? (e.slot == 0 ? u : v) : e.arc; };

    std::vector<std::array<int, 4>> boundaries;
    std::array<int, 4> outer{};
    for (int i = 0; i < 4; ++i) outer[static_cast<size_t>(i)] = remap(t.outer.points[static_cast<size_t>(i)]);
    boundaries.push_back(outer);
    for (const BoundaryCycle& c : t.holes) {
        std::array<int, 4> cycle{};
        for (int i = 0; i < 4; ++i) cycle[static_cast<size_t>(i)] = remap(c.points[static_cast<size_t>(i)]);
        boundaries.push_back(cycle);
    }
    std::vector<std::array<int, 4>> crossings;
    for (const Crossing& x : t.crossings) {
        std::array<int, 4> ends{};
        for (int i = 0; i < 4; ++i) ends[static_cast<size_t>(i)] = remap(x.ends[static_cast<size_t>(i)]);
        crossings.push_back(ends);
    }
    crossings.push_back({u, loop1, loop1, w});
    crossings.push_back({w, v, loop2, loop2});
    return detail::assemble_tangle(boundaries, crossings, uf, t.free_loops);
}

} // namespace tanglekit
