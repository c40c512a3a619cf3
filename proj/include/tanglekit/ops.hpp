#pragma once

#include <array>
#include <string>
#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/proj_matrix.hpp"
#include "tanglekit/rng.hpp"

// The five elementary operations on 2x2 invariants of spherical tangles:
// star (mirror image), dash (inversion through the shell), r1 and r2 (quarter
// rotations of the inner and outer boundary), and R = r1 r2 (rotation of the
// whole shell). Each acts as a signed permutation of the four entries, so the
// group they generate is finite and can be verified mechanically.

namespace tanglekit {

enum class ElemOp { Star, Dash, R1, R2, R };

// Entry slots in column-major order: alpha = (0,0), beta = (1,0),
// gamma = (0,1), delta = (1,1). out[s] = sign[s] * in[perm[s]]. Stored
// canonically with sign[0] = +1 (flipping all signs gives the same map on
// sign classes of matrices).
struct SignedPermAction {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> sign{1, 1, 1, 1};

    static SignedPermAction identity();
    static SignedPermAction of(ElemOp op);

    // Apply *this first, then next.
    SignedPermAction then(const SignedPermAction& next) const;

    friend bool operator==(const SignedPermAction& a, const SignedPermAction& b) {
        return a.perm == b.perm && a.sign == b.sign;
    }
    friend bool operator!=(const SignedPermAction& a, const SignedPermAction& b) { return !(a == b); }
};

ProjMatrix apply_action(const SignedPermAction& act, const ProjMatrix& m); // 2x2 only
ProjMatrix apply_op(ElemOp op, const ProjMatrix& m);

// Words over the letters x (dash), y (r1), z (star), applied left to right.
SignedPermAction word_action(const std::string& word);
ProjMatrix word_apply(const std::string& word, const ProjMatrix& m);

// Closure of {dash, r1, star} under composition, in search order.
std::vector<SignedPermAction> enumerate_group();

// Mechanical check of the presentation: the generators satisfy the nine
// Coxeter relators, the abstract group those relators present has the same
// order as the concrete action group, the product xy has order exactly four,
// z is central, and the eight x/y alternating words are pairwise distinct.
struct CoxeterReport {
    bool ok = false;
    int action_group_order = 0;
    int presentation_order = 0;
    bool relators_hold = false;
    bool xy_has_order_four = false;
    bool z_central = false;
    bool coset_words_distinct = false;
    std::vector<std::string> notes;
};

CoxeterReport verify_coxeter();

// Diagram-level counterparts: mirror swaps every crossing, rotations shift a
// boundary cycle by one quarter turn.
TangleDiagram mirror_diagram(const TangleDiagram& t);

enum class BoundarySide { Outer, Hole };

TangleDiagram rotate_boundary_diagram(const TangleDiagram& t, BoundarySide side, int hole_index = 0);

// Determinant survey over random spherical diagrams; reports, never asserts.
struct FuzzTrial {
    std::string diagram;
    i64 det = 0;
    bool square = false;
};

struct FuzzDetReport {
    int trials = 0;
    int max_crossings = 0;
    u64 seed = 0;
    int squares = 0;
    std::vector<FuzzTrial> non_squares;
};

FuzzDetReport fuzz_det_square(int trials, int max_crossings, u64 seed);

} // namespace tanglekit
