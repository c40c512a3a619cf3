#pragma once

#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/proj_matrix.hpp"

// The 2 x 2^n invariant of an n-punctured tangle diagram. Column j collects
// the two closures (numerator row, denominator row) of the diagram with each
// hole plugged by one of the two crossingless fundamental tangles; the
// evaluations, a priori eighth roots of unity times integers, are rotated by
// a single common unit into a genuine integer matrix defined up to sign.

namespace tanglekit {

// Exponent offsets t_j for the 2^n columns: t_0 = 0 and each doubling step
// appends the previous block with every entry bumped by one (so t_j counts
// the 2s in the fill pattern of column j).
std::vector<int> t_sequence(int n);

// Which fundamental tangle (1 = vertical arcs, 2 = horizontal arcs) goes in
// each hole; entry i belongs to hole i and the first hole is the most
// significant digit of the column index.
struct FillPattern {
    std::vector<int> entries;
};

FillPattern fill_pattern(int n, int column);

enum class ClosureKind { Numerator, Denominator };

// Plug every hole per the pattern, then join the outer boundary: numerator
// joins NW-NE and SW-SE, denominator joins NW-SW and NE-SE.
LinkDiagram close_and_fill(const TangleDiagram& t, ClosureKind kind, const FillPattern& fill);

inline constexpr int kDefaultMaxHoles = 8;

ProjMatrix compute_invariant(const TangleDiagram& t, int max_holes = kDefaultMaxHoles);

} // namespace tanglekit
