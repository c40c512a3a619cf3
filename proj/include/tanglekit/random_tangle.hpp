#pragma once

#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/rng.hpp"

// Random and exhaustive diagram generators for property tests. Everything is
// built from planar primitives (fundamental tangles, twist chains, connected
// sums, hole filling), so every output is guaranteed to be a genuine
// punctured-ball diagram; gluing arbitrary crossing lists instead can
// silently produce non-planar data.

namespace tanglekit {

TangleDiagram random_ball_tangle(Rng& rng, int max_crossings);
TangleDiagram random_spherical_tangle(Rng& rng, int max_crossings);
// n_holes up to 2; larger targets are not needed by the tests.
TangleDiagram random_tangle_with_holes(Rng& rng, int n_holes, int max_crossings);
LinkDiagram random_link(Rng& rng, int max_crossings);

// Every alternating-fold word of twist chains with the given total crossing
// budget, plus the two crossingless tangles. Serves as the exhaustive small
// diagram family.
std::vector<TangleDiagram> twist_word_tangles(int max_crossings);

/// Splice a cancelling pair of crossings into a randomly chosen strand: two
// kinks of opposite handedness in series, whose bracket contributions are
// units that multiply to one, so every closure's bracket is unchanged.
TangleDiagram insert_rii(const TangleDiagram& t, Rng& rng);

} // namespace tanglekit
