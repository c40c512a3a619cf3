#pragma once

#include <array>
#include <vector>

#include "tanglekit/proj_matrix.hpp"

// Tensor calculus on invariants: the product map on column vectors, the
// induced pairing matrix for plugging parts into holes, closed forms for the
// two connected sums, and the finite probe family that detects equality of
// invariants from their action on filled columns.

namespace tanglekit {

// Index tuples (i_1..i_n) with 1 <= i_m <= ks[m], ordered dictionary-style
// with the last coordinate moving fastest. Ranks are 1-based.
std::vector<int> tuple_for_rank(const std::vector<int>& ks, i64 rank);
i64 rank_for_tuple(const std::vector<int>& ks, const std::vector<int>& tuple);

// Product vector: entry at rank r is the product of each factor's entry at
// r's tuple coordinate. Lengths must match ks exactly.
std::vector<i64> xi(int n, const std::vector<int>& ks, const std::vector<std::vector<i64>>& vectors);

// Same map lifted to sign classes of column vectors.
ProjMatrix xi_bracket(int n, const std::vector<int>& ks, const std::vector<ProjMatrix>& columns);

// All products of n factors drawn from {e1, e2, e1+e2}: enough columns to
// separate invariants. Deterministic order, duplicates removed.
std::vector<ProjMatrix> probe_set(int n);

// Whether a and b act identically (as sign classes) on every probe column.
bool probe_equal(const ProjMatrix& a, const ProjMatrix& b);

// Pairing matrix of a list of parts: row for each choice of one row index
// per part, column for each choice of one column per part; the entry is the
// product of the selected part entries.
ProjMatrix eta(const std::vector<ProjMatrix>& parts);

// Invariant of the composite tangle: outer invariant times eta of the parts.
ProjMatrix compose_invariants(const ProjMatrix& f_t, const std::vector<ProjMatrix>& parts);

// Closed forms for the connected sums. Columns are indexed i-major (i runs
// over a's columns, j over b's).
ProjMatrix connect_h_inv(const ProjMatrix& a, const ProjMatrix& b);
ProjMatrix connect_v_inv(const ProjMatrix& a, const ProjMatrix& b);

// Invariant of the two-bridge-style family built from four twist regions
// p[i] framed by the four-string pattern q[i]; always a 2x2 class whose
// determinant is a perfect square.
ProjMatrix j_family_invariant(const std::array<i64, 4>& p, const std::array<i64, 4>& q);

} // namespace tanglekit
