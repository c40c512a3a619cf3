#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tanglekit/errors.hpp"

// Integer matrices and their sign classes. Invariants of punctured tangles
// live in PM_{2 x 2^n}(Z): integer matrices modulo a global sign flip. We
// store the canonical representative (first nonzero entry in row-major order
// positive; the all-zero matrix is its own class).

namespace tanglekit {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a; // row-major

    static IntMatrix zeros(int rows, int cols);

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y); // checked arithmetic
IntMatrix negated(const IntMatrix& x);

class ProjMatrix {
public:
    ProjMatrix() = default;
    explicit ProjMatrix(IntMatrix m); // takes any representative, stores canonical

    // Row-major literal, mostly for tests and fixtures.
    static ProjMatrix from_rows(std::initializer_list<std::initializer_list<i64>> rows);

    const IntMatrix& rep() const { return m_; }
    int rows() const { return m_.rows; }
    int cols() const { return m_.cols; }
    i64 at(int r, int c) const { return m_.at(r, c); }

    friend bool operator==(const ProjMatrix& x, const ProjMatrix& y) { return x.m_ == y.m_; }
    friend bool operator!=(const ProjMatrix& x, const ProjMatrix& y) { return !(x == y); }

private:
    IntMatrix m_;
};

ProjMatrix proj_matmul(const ProjMatrix& x, const ProjMatrix& y);

// Well-defined on 2x2 sign classes since det(-M) = det(M). ShapeError otherwise.
i64 determinant(const ProjMatrix& m);

// JSON shape {"n": n, "rows": [[...],[...]]} for 2 x 2^n matrices.
std::string to_json(const ProjMatrix& m);
ProjMatrix proj_matrix_from_json(const std::string& text);

// One-line text form, e.g. "[[1, 0], [0, 1]]".
std::string to_text(const ProjMatrix& m);

} // namespace tanglekit
