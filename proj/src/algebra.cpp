#include "tanglekit/algebra.hpp"

#include <bit>
#include <string>

namespace tanglekit {

namespace {

i64 checked_product_of(const std::vector<int>& ks) {
    i64 total = 1;
    for (int k : ks) {
        if (k < 1) throw LengthMismatch("factor lengths must be at least 1");
        total = checked_mul(total, k);
    }
    return total;
}

} // namespace

std::vector<int> tuple_for_rank(const std::vector<int>& ks, i64 rank) {
    i64 total = checked_product_of(ks);
    if (rank < 1 || rank > total)
        throw IndexError("tuple rank " + std::to_string(rank) + " out of range 1.." + std::to_string(total));
    std::vector<int> tuple(ks.size(), 1);
    i64 rest = rank - 1;
    for (size_t m = ks.size(); m-- > 0;) {
        tuple[m] = 1 + static_cast<int>(rest % ks[m]);
        rest /= ks[m];
    }
    return tuple;
}

i64 rank_for_tuple(const std::vector<int>& ks, const std::vector<int>& tuple) {
    if (tuple.size() != ks.size()) throw LengthMismatch("tuple arity does not match index bounds");
    i64 rank = 0;
    for (size_t m = 0; m < ks.size(); ++m) {
        if (tuple[m] < 1 || tuple[m] > ks[m])
            throw IndexError("tuple coordinate " + std::to_string(tuple[m]) + " out of range");
        rank = rank * ks[m] + (tuple[m] - 1);
    }
    return rank + 1;
}

std::vector<i64> xi(int n, const std::vector<int>& ks, const std::vector<std::vector<i64>>& vectors) {
    if (n < 1) throw LengthMismatch("product map needs at least one factor");
    if (static_cast<int>(ks.size()) != n || static_cast<int>(vectors.size()) != n)
        throw LengthMismatch("expected " + std::to_string(n) + " lengths and vectors");
    for (int m = 0; m < n; ++m)
        if (static_cast<int>(vectors[static_cast<size_t>(m)].size()) != ks[static_cast<size_t>(m)])
            throw LengthMismatch("vector " + std::to_string(m) + " has length " +
                                 std::to_string(vectors[static_cast<size_t>(m)].size()) + ", expected " +
                                 std::to_string(ks[static_cast<size_t>(m)]));
    i64 total = checked_product_of(ks);
    std::vector<i64> out(static_cast<size_t>(total));
    std::vector<int> tuple(static_cast<size_t>(n), 1);
    for (i64 r = 0; r < total; ++r) {
        i64 v = 1;
        for (int m = 0; m < n; ++m)
            v = checked_mul(v, vectors[static_cast<size_t>(m)][static_cast<size_t>(tuple[static_cast<size_t>(m)] - 1)]);
        out[static_cast<size_t>(r)] = v;
        for (size_t m = tuple.size(); m-- > 0;) { // odometer, last coordinate fastest
            if (tuple[m] < ks[m]) {
                ++tuple[m];
                break;
            }
            tuple[m] = 1;
        }
    }
    return out;
}

ProjMatrix xi_bracket(int n, const std::vector<int>& ks, const std::vector<ProjMatrix>& columns) {
    if (n < 1) throw LengthMismatch("product map needs at least one factor");
    if (static_cast<int>(columns.size()) != n)
        throw LengthMismatch("expected " + std::to_string(n) + " columns");
    std::vector<std::vector<i64>> vectors;
    vectors.reserve(columns.size());
    for (const ProjMatrix& c : columns) {
        if (c.cols() != 1) throw ShapeError("product map factors must be single columns");
        vectors.push_back(c.rep().a);
    }
    std::vector<i64> prod = xi(n, ks, vectors);
    IntMatrix m;
    m.rows = static_cast<int>(prod.size());
    m.cols = 1;
    m.a = std::move(prod);
    return ProjMatrix(std::move(m));
}

std::vector<ProjMatrix> probe_set(int n) {
    if (n < 1 || n > 12)
        throw IndexError("probe family defined for 1 <= n <= 12, got " + std::to_string(n));
    const std::array<std::vector<i64>, 3> basis = {std::vector<i64>{1, 0}, std::vector<i64>{0, 1},
                                                  std::vector<i64>{1, 1}};
    std::vector<int> twos(static_cast<size_t>(n), 2);
    std::vector<ProjMatrix> probes;
    i64 count = 1;
    for (int i = 0; i < n; ++i) count *= 3;
    for (i64 code = 0; code < count; ++code) {
        // Base-3 digits of the code select factors; first factor reads the
        // most significant digit.
        std::vector<std::vector<i64>> factors(static_cast<size_t>(n));
        i64 rest = code;
        for (size_t m = factors.size(); m-- > 0;) {
            factors[m] = basis[static_cast<size_t>(rest % 3)];
            rest /= 3;
        }
        std::vector<i64> v = xi(n, twos, factors);
        IntMatrix m;
        m.rows = static_cast<int>(v.size());
        m.cols = 1;
        m.a = std::move(v);
        ProjMatrix probe(std::move(m));
        bool seen = false;
        for (const ProjMatrix& q : probes)
            if (q == probe) {
                seen = true;
                break;
            }
        if (!seen) probes.push_back(std::move(probe));
    }
    return probes;
}

bool probe_equal(const ProjMatrix& a, const ProjMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("probe comparison needs matching shapes");
    if (a.rows() != 2) throw ShapeError("probe comparison expects 2-row invariants");
    unsigned c = static_cast<unsigned>(a.cols());
    if (c == 0 || !std::has_single_bit(c))
        throw ShapeError("probe comparison needs a power-of-two column count");
    int n = std::countr_zero(c);
    if (n == 0) return ProjMatrix(a.rep()) == ProjMatrix(b.rep());
    for (const ProjMatrix& probe : probe_set(n)) {
        ProjMatrix av(matmul(a.rep(), probe.rep()));
        ProjMatrix bv(matmul(b.rep(), probe.rep()));
        if (av != bv) return false;
    }
    return true;
}

ProjMatrix eta(const std::vector<ProjMatrix>& parts) {
    int n = static_cast<int>(parts.size());
    if (n < 1) throw ShapeError("pairing matrix needs at least one part");
    std::vector<int> col_counts;
    i64 total_cols = 1;
    for (const ProjMatrix& p : parts) {
        if (p.rows() != 2) throw ShapeError("parts must have 2 rows");
        unsigned c = static_cast<unsigned>(p.cols());
        if (c == 0 || !std::has_single_bit(c)) throw ShapeError("parts must have a power-of-two column count");
        col_counts.push_back(p.cols());
        total_cols = checked_mul(total_cols, p.cols());
    }
    i64 total_rows = i64{1} << n;
    IntMatrix out = IntMatrix::zeros(static_cast<int>(total_rows), static_cast<int>(total_cols));
    std::vector<int> alpha(static_cast<size_t>(n), 1); // row selector per part, in {1,2}
    for (i64 r = 0; r < total_rows; ++r) {
        std::vector<int> beta(static_cast<size_t>(n), 1); // column selector per part
        for (i64 c = 0; c < total_cols; ++c) {
            i64 v = 1;
            for (int m = 0; m < n; ++m)
                v = checked_mul(v, parts[static_cast<size_t>(m)].at(alpha[static_cast<size_t>(m)] - 1,
                                                                   beta[static_cast<size_t>(m)] - 1));
            out.at(static_cast<int>(r), static_cast<int>(c)) = v;
            for (size_t m = beta.size(); m-- > 0;) {
                if (beta[m] < col_counts[m]) {
                    ++beta[m];
                    break;
                }
                beta[m] = 1;
            }
        }
        for (size_t m = alpha.size(); m-- > 0;) {
            if (alpha[m] < 2) {
                ++alpha[m];
                break;
            }
            alpha[m] = 1;
        }
    }
    return ProjMatrix(std::move(out));
}

ProjMatrix compose_invariants(const ProjMatrix& f_t, const std::vector<ProjMatrix>& parts) {
    if (f_t.rows() != 2) throw ShapeError("outer invariant must have 2 rows");
    i64 expected = i64{1} << parts.size();
    if (f_t.cols() != expected)
        throw ShapeError("outer invariant has " + std::to_string(f_t.cols()) + " columns but " +
                         std::to_string(parts.size()) + " parts were supplied");
    ProjMatrix pairing = eta(parts);
    return ProjMatrix(matmul(f_t.rep(), pairing.rep()));
}

ProjMatrix connect_h_inv(const ProjMatrix& a, const ProjMatrix& b) {
    if (a.rows() != 2 || b.rows() != 2) throw ShapeError("connected sum needs 2-row invariants");
    IntMatrix out = IntMatrix::zeros(2, static_cast<int>(checked_mul(a.cols(), b.cols())));
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            int c = i * b.cols() + j;
            out.at(0, c) = checked_add(checked_mul(a.at(0, i), b.at(1, j)),
                                       checked_mul(a.at(1, i), b.at(0, j)));
            out.at(1, c) = checked_mul(a.at(1, i), b.at(1, j));
        }
    return ProjMatrix(std::move(out));
}

ProjMatrix connect_v_inv(const ProjMatrix& a, const ProjMatrix& b) {
    if (a.rows() != 2 || b.rows() != 2) throw ShapeError("connected sum needs 2-row invariants");
    IntMatrix out = IntMatrix::zeros(2, static_cast<int>(checked_mul(a.cols(), b.cols())));
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            int c = i * b.cols() + j;
            out.at(0, c) = checked_mul(a.at(0, i), b.at(0, j));
            out.at(1, c) = checked_add(checked_mul(a.at(1, i), b.at(0, j)),
                                       checked_mul(a.at(0, i), b.at(1, j)));
        }
    return ProjMatrix(std::move(out));
}

ProjMatrix j_family_invariant(const std::array<i64, 4>& p, const std::array<i64, 4>& q) {
    auto mul3 = [](i64 a, i64 b, i64 c) { return checked_mul(checked_mul(a, b), c); };
    auto mul4 = [&](i64 a, i64 b, i64 c, i64 d) { return checked_mul(mul3(a, b, c), d); };
    auto sum4 = [](i64 a, i64 b, i64 c, i64 d) {
        return checked_add(checked_add(a, b), checked_add(c, d));
    };
    IntMatrix m = IntMatrix::zeros(2, 2);
    m.at(0, 0) = sum4(mul4(p[0], p[1], p[2], q[3]), mul4(p[0], p[1], q[2], p[3]),
                      mul4(p[0], q[1], p[2], p[3]), mul4(q[0], p[1], p[2], p[3]));
    m.at(0, 1) = checked_neg(sum4(mul4(p[0], q[1], p[2], q[3]), mul4(p[0], q[1], q[2], p[3]),
                                  mul4(q[0], p[1], p[2], q[3]), mul4(q[0], p[1], q[2], p[3])));
    m.at(1, 0) = sum4(mul4(p[0], p[1], q[2], q[3]), mul4(p[0], q[1], q[2], p[3]),
                      mul4(q[0], p[1], p[2], q[3]), mul4(q[0], q[1], p[2], p[3]));
    m.at(1, 1) = checked_neg(sum4(mul4(p[0], q[1], q[2], q[3]), mul4(q[0], p[1], q[2], q[3]),
                                  mul4(q[0], q[1], p[2], q[3]), mul4(q[0], q[1], q[2], p[3])));
    return ProjMatrix(std::move(m));
}

} // namespace tanglekit
