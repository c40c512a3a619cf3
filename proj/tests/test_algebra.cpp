#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tanglekit/algebra.hpp"
#include "tanglekit/gluing.hpp"
#include "tanglekit/invariant.hpp"

using namespace tanglekit;

static std::string data_file(const std::string& name) {
    const char* dir = std::getenv("TANGLEKIT_TEST_DATA");
    return std::string(dir ? dir : "tests/data") + "/" + name;
}

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST_CASE("index tuples follow dictionary order with the last coordinate fastest") {
    std::vector<int> twos3{2, 2, 2};
    CHECK(tuple_for_rank(twos3, 1) == std::vector<int>{1, 1, 1});
    CHECK(tuple_for_rank(twos3, 2) == std::vector<int>{1, 1, 2});
    CHECK(tuple_for_rank(twos3, 7) == std::vector<int>{2, 2, 1});
    CHECK(tuple_for_rank(twos3, 8) == std::vector<int>{2, 2, 2});
    CHECK(tuple_for_rank({2, 2}, 3) == std::vector<int>{2, 1});
    CHECK(tuple_for_rank({2, 2, 2, 2}, 7) == std::vector<int>{1, 2, 2, 1});
    CHECK(tuple_for_rank({2, 2, 2, 2}, 16) == std::vector<int>{2, 2, 2, 2});

    // Mixed bounds: the second coordinate can run to 4.
    CHECK(tuple_for_rank({2, 4, 4}, 5) == std::vector<int>{1, 2, 1});
    CHECK(tuple_for_rank({2, 4, 4}, 17) == std::vector<int>{2, 1, 1});

    for (i64 r = 1; r <= 16; ++r)
        CHECK(rank_for_tuple({2, 2, 2, 2}, tuple_for_rank({2, 2, 2, 2}, r)) == r);
    for (i64 r = 1; r <= 32; ++r)
        CHECK(rank_for_tuple({2, 4, 4}, tuple_for_rank({2, 4, 4}, r)) == r);

    CHECK_THROWS_AS(tuple_for_rank(twos3, 0), IndexError);
    CHECK_THROWS_AS(tuple_for_rank(twos3, 9), IndexError);
    CHECK_THROWS_AS(rank_for_tuple(twos3, {1, 1}), LengthMismatch);
    CHECK_THROWS_AS(rank_for_tuple(twos3, {1, 3, 1}), IndexError);
    CHECK_THROWS_AS(tuple_for_rank({2, 0}, 1), LengthMismatch);
}

TEST_CASE("product vector expands like a polynomial product") {
    CHECK(xi(1, {3}, {{4, 5, 6}}) == std::vector<i64>{4, 5, 6});
    CHECK(xi(2, {2, 2}, {{2, 3}, {5, 7}}) == std::vector<i64>{10, 14, 15, 21});

    // Prime entries make every product identify its index tuple.
    std::vector<int> ks{2, 4, 4};
    std::vector<std::vector<i64>> vs{{2, 3}, {5, 7, 11, 13}, {17, 19, 23, 29}};
    std::vector<i64> prod = xi(3, ks, vs);
    REQUIRE(prod.size() == 32);
    for (i64 r = 1; r <= 32; ++r) {
        std::vector<int> t = tuple_for_rank(ks, r);
        i64 expected = vs[0][static_cast<size_t>(t[0] - 1)] * vs[1][static_cast<size_t>(t[1] - 1)] *
                       vs[2][static_cast<size_t>(t[2] - 1)];
        CHECK(prod[static_cast<size_t>(r - 1)] == expected);
    }

    CHECK_THROWS_AS(xi(2, {2, 2}, {{1, 2}}), LengthMismatch);
    CHECK_THROWS_AS(xi(2, {2, 2}, {{1, 2}, {1, 2, 3}}), LengthMismatch);
    CHECK_THROWS_AS(xi(0, {}, {}), LengthMismatch);
    CHECK_THROWS_AS(xi(1, {0}, {{}}), LengthMismatch);
}

TEST_CASE("product vector is associative under grouping") {
    std::vector<std::vector<i64>> vs{{2, 3}, {5, 7, 11, 13}, {17, 19, 23, 29}};
    std::vector<i64> flat = xi(3, {2, 4, 4}, vs);
    std::vector<i64> left = xi(2, {2, 4}, {vs[0], vs[1]});
    CHECK(xi(2, {8, 4}, {left, vs[2]}) == flat);
    std::vector<i64> right = xi(2, {4, 4}, {vs[1], vs[2]});
    CHECK(xi(2, {2, 16}, {vs[0], right}) == flat);
}

TEST_CASE("product of sign-class columns") {
    ProjMatrix a = ProjMatrix::from_rows({{1}, {2}});
    ProjMatrix b = ProjMatrix::from_rows({{3}, {4}});
    ProjMatrix ab = xi_bracket(2, {2, 2}, {a, b});
    CHECK(ab == ProjMatrix::from_rows({{3}, {4}, {6}, {8}}));

    // Flipping an input's representative does not change the output class.
    ProjMatrix neg_a = ProjMatrix::from_rows({{-1}, {-2}});
    CHECK(xi_bracket(2, {2, 2}, {neg_a, b}) == ab);

    CHECK_THROWS_AS(xi_bracket(2, {2, 2}, {a}), LengthMismatch);
    CHECK_THROWS_AS(xi_bracket(1, {2}, {ProjMatrix::from_rows({{1, 0}, {0, 1}})}), ShapeError);
}

TEST_CASE("probe families") {
    std::vector<ProjMatrix> p1 = probe_set(1);
    REQUIRE(p1.size() == 3);
    CHECK(p1[0] == ProjMatrix::from_rows({{1}, {0}}));
    CHECK(p1[1] == ProjMatrix::from_rows({{0}, {1}}));
    CHECK(p1[2] == ProjMatrix::from_rows({{1}, {1}}));

    std::vector<ProjMatrix> p2 = probe_set(2);
    REQUIRE(p2.size() == 9);
    CHECK(p2[0] == ProjMatrix::from_rows({{1}, {0}, {0}, {0}}));
    CHECK(p2[8] == ProjMatrix::from_rows({{1}, {1}, {1}, {1}}));

    // n = 3: all 27 products, frozen by hand from the three basis columns.
    const i64 expected3[27][8] = {
        {1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1, 1, 1},
        {1, 0, 0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0},
        {0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 0, 1, 1},
        {1, 0, 1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 1, 1}};
    std::vector<ProjMatrix> p3 = probe_set(3);
    REQUIRE(p3.size() == 27);
    for (size_t i = 0; i < 27; ++i) {
        REQUIRE(p3[i].rows() == 8);
        REQUIRE(p3[i].cols() == 1);
        for (int r = 0; r < 8; ++r) CHECK(p3[i].at(r, 0) == expected3[i][r]);
    }

    CHECK(probe_set(4).size() == 81);
    CHECK_THROWS_AS(probe_set(0), IndexError);
    CHECK_THROWS_AS(probe_set(13), IndexError);
}

TEST_CASE("probe comparison separates invariants that differ beyond column signs") {
    ProjMatrix a = ProjMatrix::from_rows({{1, 0}, {0, 1}});
    ProjMatrix b = ProjMatrix::from_rows({{1, 0}, {0, -1}});
    CHECK(a != b);
    // Column-by-column the two agree as sign classes; only a mixed column
    // (the sum of both basis fillings) tells them apart.
    ProjMatrix e2 = ProjMatrix::from_rows({{0}, {1}});
    CHECK(ProjMatrix(matmul(a.rep(), e2.rep())) == ProjMatrix(matmul(b.rep(), e2.rep())));
    CHECK(!probe_equal(a, b));

    CHECK(probe_equal(a, a));
    ProjMatrix wide = ProjMatrix::from_rows({{1, 2, 3, 4}, {5, 6, 7, 8}});
    CHECK(probe_equal(wide, ProjMatrix::from_rows({{-1, -2, -3, -4}, {-5, -6, -7, -8}})));
    CHECK(!probe_equal(wide, ProjMatrix::from_rows({{1, 2, 3, 4}, {5, 6, 7, 9}})));

    CHECK_THROWS_AS(probe_equal(a, wide), ShapeError);
    CHECK_THROWS_AS(probe_equal(ProjMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}),
                                ProjMatrix::from_rows({{1, 2, 3}, {4, 5, 6}})),
                    ShapeError);
}

TEST_CASE("pairing matrix of a single part is the part itself") {
    ProjMatrix b = ProjMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(eta({b}) == b);
    ProjMatrix wide = ProjMatrix::from_rows({{1, 2, 3, 4}, {5, 6, 7, 8}});
    CHECK(eta({wide}) == wide);
}

TEST_CASE("pairing matrix numeric golden for two parts") {
    ProjMatrix b1 = ProjMatrix::from_rows({{1, 2, 3, 4}, {5, 6, 7, 8}});
    ProjMatrix b2 = ProjMatrix::from_rows({{9, 10}, {11, 12}});
    ProjMatrix e = eta({b1, b2});
    CHECK(e == ProjMatrix::from_rows({{9, 10, 18, 20, 27, 30, 36, 40},
                                      {11, 12, 22, 24, 33, 36, 44, 48},
                                      {45, 50, 54, 60, 63, 70, 72, 80},
                                      {55, 60, 66, 72, 77, 84, 88, 96}}));

    // Column-vector parts are allowed: plugging plain ball fillings.
    ProjMatrix cols = eta({ProjMatrix::from_rows({{1}, {0}}), ProjMatrix::from_rows({{0}, {1}})});
    CHECK(cols == ProjMatrix::from_rows({{0}, {1}, {0}, {0}}));

    CHECK_THROWS_AS(eta({}), ShapeError);
    CHECK_THROWS_AS(eta({ProjMatrix::from_rows({{1, 2, 3}, {4, 5, 6}})}), ShapeError);
    CHECK_THROWS_AS(eta({ProjMatrix::from_rows({{1}, {2}, {3}})}), ShapeError);
}

TEST_CASE("five-part pairing matrix golden") {
    ProjMatrix part_a = ProjMatrix::from_rows({{-4}, {1}});
    ProjMatrix part_c = ProjMatrix::from_rows({{2}, {1}});
    ProjMatrix id = ProjMatrix::from_rows({{1, 0}, {0, 1}});
    ProjMatrix e = eta({part_a, part_a, part_c, part_a, id});
    REQUIRE(e.rows() == 32);
    REQUIRE(e.cols() == 2);
    const i64 expected[32][2] = {
        {128, 0}, {0, 128}, {-32, 0}, {0, -32}, {64, 0}, {0, 64}, {-16, 0}, {0, -16},
        {-32, 0}, {0, -32}, {8, 0},   {0, 8},   {-16, 0}, {0, -16}, {4, 0},  {0, 4},
        {-32, 0}, {0, -32}, {8, 0},   {0, 8},   {-16, 0}, {0, -16}, {4, 0},  {0, 4},
        {8, 0},   {0, 8},   {-2, 0},  {0, -2},  {4, 0},   {0, 4},   {-1, 0}, {0, -1}};
    for (int r = 0; r < 32; ++r)
        for (int c = 0; c < 2; ++c) CHECK(e.at(r, c) == expected[r][c]);
}

TEST_CASE("composing the five-part example reproduces the 2x2 value") {
    ProjMatrix f5 = proj_matrix_from_json(slurp(data_file("f5t5.json")));
    REQUIRE(f5.rows() == 2);
    REQUIRE(f5.cols() == 32);
    ProjMatrix part_a = ProjMatrix::from_rows({{-4}, {1}});
    ProjMatrix part_c = ProjMatrix::from_rows({{2}, {1}});
    ProjMatrix id = ProjMatrix::from_rows({{1, 0}, {0, 1}});
    ProjMatrix result = compose_invariants(f5, {part_a, part_a, part_c, part_a, id});
    CHECK(result == ProjMatrix::from_rows({{-32, 16}, {-16, -10}}));
    CHECK(determinant(result) == 576);

    CHECK_THROWS_AS(compose_invariants(f5, {part_a, part_a}), ShapeError);
    CHECK_THROWS_AS(compose_invariants(part_a, {part_a}), ShapeError);
}

TEST_CASE("composition agrees with hole filling on diagrams") {
    TangleDiagram e = connect_v_diagram(twist(1), identity_spherical());
    ProjMatrix fe = compute_invariant(e);
    ProjMatrix fc = compute_invariant(twist(1));
    CHECK(compose_invariants(fe, {fc}) == compute_invariant(fill_hole(e, 0, twist(1))));
    CHECK(compose_invariants(ProjMatrix::from_rows({{1, 0}, {0, 1}}), {fe}) == fe);

    // Two-hole outer diagram with one part of each shape.
    TangleDiagram h2 = connect_h_diagram(identity_spherical(), identity_spherical());
    ProjMatrix fh2 = compute_invariant(h2);
    TangleDiagram composite = fill_hole(fill_hole(h2, 1, twist(-2)), 0, e);
    ProjMatrix direct = compute_invariant(composite);
    CHECK(compose_invariants(fh2, {fe, compute_invariant(twist(-2))}) == direct);
}

TEST_CASE("connected sum closed forms match the two-term rules") {
    ProjMatrix b1 = ProjMatrix::from_rows({{2}, {1}});
    ProjMatrix b2 = ProjMatrix::from_rows({{3}, {1}});
    CHECK(connect_h_inv(b1, b2) == ProjMatrix::from_rows({{5}, {1}}));
    CHECK(connect_v_inv(b1, b2) == ProjMatrix::from_rows({{6}, {5}}));

    // Generic ball values [p,q] and [r,s].
    ProjMatrix u = ProjMatrix::from_rows({{2}, {3}});
    ProjMatrix v = ProjMatrix::from_rows({{5}, {7}});
    CHECK(connect_h_inv(u, v) == ProjMatrix::from_rows({{2 * 7 + 3 * 5}, {3 * 7}}));
    CHECK(connect_v_inv(u, v) == ProjMatrix::from_rows({{2 * 5}, {3 * 5 + 2 * 7}}));

    // Ball against a one-hole invariant.
    ProjMatrix s = ProjMatrix::from_rows({{5, 7}, {11, 13}});
    CHECK(connect_h_inv(u, s) ==
          ProjMatrix::from_rows({{2 * 11 + 3 * 5, 2 * 13 + 3 * 7}, {3 * 11, 3 * 13}}));
    CHECK(connect_v_inv(u, s) ==
          ProjMatrix::from_rows({{2 * 5, 2 * 7}, {3 * 5 + 2 * 11, 3 * 7 + 2 * 13}}));

    // Two one-hole invariants [[p,r],[q,s]] and [[a,c],[b,d]].
    ProjMatrix x = ProjMatrix::from_rows({{2, 5}, {3, 7}});
    ProjMatrix y = ProjMatrix::from_rows({{11, 17}, {13, 19}});
    CHECK(connect_h_inv(x, y) ==
          ProjMatrix::from_rows({{2 * 13 + 3 * 11, 2 * 19 + 3 * 17, 5 * 13 + 7 * 11, 5 * 19 + 7 * 17},
                                 {3 * 13, 3 * 19, 7 * 13, 7 * 19}}));
    CHECK(connect_v_inv(x, y) ==
          ProjMatrix::from_rows({{2 * 11, 2 * 17, 5 * 11, 5 * 17},
                                 {3 * 11 + 2 * 13, 3 * 17 + 2 * 19, 7 * 11 + 5 * 13, 7 * 17 + 5 * 19}}));

    CHECK_THROWS_AS(connect_h_inv(ProjMatrix::from_rows({{1}, {2}, {3}}), b1), ShapeError);
}

static ProjMatrix swap_factor_order(const ProjMatrix& m, int ca, int cb) {
    // Reindex columns (i,j) -> (j,i): undo the hole renumbering that
    // swapping the two summands induces.
    IntMatrix out = IntMatrix::zeros(m.rows(), m.cols());
    for (int i = 0; i < ca; ++i)
        for (int j = 0; j < cb; ++j)
            for (int r = 0; r < m.rows(); ++r) out.at(r, j * ca + i) = m.at(r, i * cb + j);
    return ProjMatrix(std::move(out));
}

TEST_CASE("connected sums commute up to hole reordering") {
    ProjMatrix u = ProjMatrix::from_rows({{2}, {3}});
    ProjMatrix s = ProjMatrix::from_rows({{5, 7}, {11, 13}});
    ProjMatrix id = ProjMatrix::from_rows({{1, 0}, {0, 1}});
    ProjMatrix t = ProjMatrix::from_rows({{1, 2}, {3, 4}});

    // With a plain ball on either side the order is invisible.
    CHECK(connect_h_inv(u, s) == connect_h_inv(s, u));
    CHECK(connect_v_inv(u, s) == connect_v_inv(s, u));

    // With holes on both sides the entries move: equality only holds after
    // renumbering the holes.
    CHECK(connect_h_inv(id, t) != connect_h_inv(t, id));
    CHECK(connect_h_inv(id, t) == swap_factor_order(connect_h_inv(t, id), t.cols(), id.cols()));
    CHECK(connect_v_inv(id, t) == swap_factor_order(connect_v_inv(t, id), t.cols(), id.cols()));
}

TEST_CASE("connected sum closed forms match diagram surgery") {
    TangleDiagram e = connect_v_diagram(twist(1), identity_spherical());
    std::vector<TangleDiagram> pool;
    pool.push_back(twist(2));
    pool.push_back(twist(-1));
    pool.push_back(identity_spherical());
    pool.push_back(e);
    for (const TangleDiagram& a : pool)
        for (const TangleDiagram& b : pool) {
            ProjMatrix fa = compute_invariant(a);
            ProjMatrix fb = compute_invariant(b);
            CHECK(compute_invariant(connect_h_diagram(a, b)) == connect_h_inv(fa, fb));
            CHECK(compute_invariant(connect_v_diagram(a, b)) == connect_v_inv(fa, fb));
        }
}

TEST_CASE("four-twist family closed form") {
    ProjMatrix j = j_family_invariant({-4, -4, 2, -4}, {1, 1, 1, 1});
    CHECK(j == ProjMatrix::from_rows({{-32, 16}, {-16, -10}}));
    CHECK(determinant(j) == 576);

    // Unit framing reduces to elementary symmetric sums.
    ProjMatrix k = j_family_invariant({1, 2, 3, 5}, {1, 1, 1, 1});
    CHECK(k == ProjMatrix::from_rows({{61, -24}, {28, -11}}));
    CHECK(determinant(k) == 1);

    CHECK(j_family_invariant({0, 0, 0, 0}, {0, 0, 0, 0}) == ProjMatrix(IntMatrix::zeros(2, 2)));

    // Determinant is the stated perfect square.
    const std::array<i64, 4> ps[] = {{1, 2, 3, 5}, {-4, -4, 2, -4}, {0, 1, -1, 2}, {3, -2, 0, 7}};
    const std::array<i64, 4> qs[] = {{1, 1, 1, 1}, {2, -1, 3, 1}, {1, 0, 2, -2}, {-1, -1, 2, 5}};
    for (const auto& p : ps)
        for (const auto& q : qs) {
            i64 root = p[0] * q[1] * q[2] * p[3] - q[0] * p[1] * p[2] * q[3];
            CHECK(determinant(j_family_invariant(p, q)) == root * root);
        }
}
