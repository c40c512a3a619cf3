#pragma once

#include <cstdint>

#include "tanglekit/diagram.hpp"
#include "tanglekit/zeta8.hpp"

// Kauffman bracket of closed link diagrams, evaluated in Z[A]/(A^4+1).
// The circle factor -A^2 - A^-2 vanishes there, so only monocyclic states
// (exactly one circle after smoothing, free loops included) contribute, each
// with weight A^(#A-smoothings - #B-smoothings).
//
// Two independent engines are provided on purpose: an explicit state sum and
// a memoized skein recursion. Tests require them to agree.

namespace tanglekit {

// Bit i chooses the smoothing at crossing i: 0 = A, 1 = B.
using State = std::uint32_t;

enum class Smoothing { A = 0, B = 1 };

// An A-smoothing joins crossing ends (0,1) and (2,3); B joins (0,3) and (1,2).
struct ResolvedState {
    i64 circles = 0;  // circles after smoothing every crossing, plus free loops
    i64 exponent = 0; // (#A-smoothings) - (#B-smoothings)
};

ResolvedState resolve(const LinkDiagram& link, State state);

// Diagram with one crossing replaced by its smoothing (arcs fused, ids
// renumbered); a strand that closes up becomes a free loop.
LinkDiagram smooth(const LinkDiagram& link, int crossing, Smoothing which);

// Hard cap for both engines; beyond this the state space is unreasonable.
inline constexpr int kMaxBracketCrossings = 24;

Zeta8 bracket_statesum(const LinkDiagram& link);
Zeta8 bracket_recursive(const LinkDiagram& link);

} // namespace tanglekit
