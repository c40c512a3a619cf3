#include "tanglekit/invariant.hpp"

#include <string>

#include "tanglekit/bracket.hpp"
#include "tanglekit/zeta8.hpp"

namespace tanglekit {

std::vector<int> t_sequence(int n) {
    if (n < 0 || n > 20)
        throw IndexError("t_sequence defined for 0 <= n <= 20, got " + std::to_string(n));
    std::vector<int> seq{0};
    for (int step = 0; step < n; ++step) {
        size_t half = seq.size();
        seq.reserve(2 * half);
        for (size_t j = 0; j < half; ++j) seq.push_back(seq[j] + 1);
    }
    return seq;
}

FillPattern fill_pattern(int n, int column) {
    if (n < 0 || n > 30) throw IndexError("fill_pattern: hole count out of range");
    if (column < 0 || column >= (1 << n))
        throw IndexError("fill_pattern: column " + std::to_string(column) + " out of range for " +
                         std::to_string(n) + " holes");
    FillPattern p;
    p.entries.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p.entries.push_back(1 + ((column >> (n - 1 - i)) & 1));
    return p;
}

LinkDiagram close_and_fill(const TangleDiagram& t, ClosureKind kind, const FillPattern& fill) {
    if (static_cast<int>(fill.entries.size()) != t.n_holes)
        throw ArityMismatch("fill pattern has " + std::to_string(fill.entries.size()) +
                            " entries for a diagram with " + std::to_string(t.n_holes) + " holes");

    // Arena: the diagram's own arcs, then two fresh arcs per hole filler.
    detail::ArcFuser uf(t.n_arcs + 2 * t.n_holes);
    for (int h = 0; h < t.n_holes; ++h) {
        int j = fill.entries[static_cast<size_t>(h)];
        if (j != 1 && j != 2)
            throw IndexError("fill pattern entries must be 1 or 2, got " + std::to_string(j));
        int a0 = t.n_arcs + 2 * h;
        int a1 = a0 + 1;
        // Filler boundary arcs at (NW, SW, SE, NE), matching fundamental(j).
        std::array<int, 4> filler = (j == 1) ? std::array<int, 4>{a0, a0, a1, a1}
                                             : std::array<int, 4>{a0, a1, a1, a0};
        const BoundaryCycle& hole = t.holes[static_cast<size_t>(h)];
        for (int i = 0; i < 4; ++i) uf.fuse(hole.points[static_cast<size_t>(i)].arc, filler[static_cast<size_t>(i)]);
    }
    if (kind == ClosureKind::Numerator) {
        uf.fuse(t.outer.points[0].arc, t.outer.points[3].arc); // NW-NE over the top
        uf.fuse(t.outer.points[1].arc, t.outer.points[2].arc); // SW-SE under the bottom
    } else {
        uf.fuse(t.outer.points[0].arc, t.outer.points[1].arc); // NW-SW around the left
        uf.fuse(t.outer.points[3].arc, t.outer.points[2].arc); // NE-SE around the right
    }

    std::vector<std::array<int, 4>> crossings;
    crossings.reserve(t.crossings.size());
    for (const Crossing& x : t.crossings)
        crossings.push_back({x.ends[0].arc, x.ends[1].arc, x.ends[2].arc, x.ends[3].arc});
    return detail::assemble_link(crossings, uf, t.free_loops);
}

ProjMatrix compute_invariant(const TangleDiagram& t, int max_holes) {
    if (t.n_holes > max_holes)
        throw TooManyHoles("diagram has " + std::to_string(t.n_holes) + " holes, limit is " +
                           std::to_string(max_holes));
    int n = t.n_holes;
    std::vector<int> offsets = t_sequence(n);
    int cols = 1 << n;

    // Each entry is known as p * A^phase with p >= 0; a single unit A^zeta
    // must rotate every nonzero entry onto the real axis.
    struct RawEntry {
        i64 p = 0;
        int phase = 0;
    };
    std::vector<RawEntry> raw(static_cast<size_t>(2 * cols));
    for (int j = 0; j < cols; ++j) {
        FillPattern pat = fill_pattern(n, j);
        for (int row = 0; row < 2; ++row) {
            ClosureKind kind = (row == 0) ? ClosureKind::Numerator : ClosureKind::Denominator;
            LinkDiagram closed = close_and_fill(t, kind, pat);
            ZPhi b = normalize_zphi(bracket_recursive(closed));
            // Row one carries (-i)^{t_j} = A^{6 t_j}; row two an extra i = A^2.
            int phase = (6 * offsets[static_cast<size_t>(j)] + (row == 1 ? 2 : 0) + b.k) % 8;
            raw[static_cast<size_t>(row * cols + j)] = RawEntry{b.p, phase};
        }
    }

    for (int zeta = 0; zeta < 8; ++zeta) {
        bool ok = true;
        for (const RawEntry& e : raw)
            if (e.p != 0 && (e.phase + zeta) % 4 != 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        IntMatrix m = IntMatrix::zeros(2, cols);
        for (int row = 0; row < 2; ++row)
            for (int j = 0; j < cols; ++j) {
                const RawEntry& e = raw[static_cast<size_t>(row * cols + j)];
                if (e.p == 0) continue;
                m.at(row, j) = ((e.phase + zeta) % 8 == 0) ? e.p : checked_neg(e.p);
            }
        return ProjMatrix(std::move(m));
    }
    throw NoIntegerNormalization("no unit rotation makes every closure evaluation integral");
}

} // namespace tanglekit
