#include "tanglekit/proj_matrix.hpp"

#include <bit>
#include <sstream>

#include <json.hpp>

namespace tanglekit {

IntMatrix IntMatrix::zeros(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ShapeError("matrix dimensions must be nonnegative");
    IntMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
    return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows)
        throw ShapeError("matmul: " + std::to_string(x.rows) + "x" + std::to_string(x.cols) + " times " +
                         std::to_string(y.rows) + "x" + std::to_string(y.cols));
    IntMatrix out = IntMatrix::zeros(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            i64 xv = x.at(r, k);
            if (xv == 0) continue;
            for (int c = 0; c < y.cols; ++c)
                out.at(r, c) = checked_add(out.at(r, c), checked_mul(xv, y.at(k, c)));
        }
    return out;
}

IntMatrix negated(const IntMatrix& x) {
    IntMatrix out = x;
    for (i64& v : out.a) v = checked_neg(v);
    return out;
}

ProjMatrix::ProjMatrix(IntMatrix m) : m_(std::move(m)) {
    for (i64 v : m_.a) {
        if (v > 0) break;
        if (v < 0) {
            m_ = negated(m_);
            break;
        }
    }
}

ProjMatrix ProjMatrix::from_rows(std::initializer_list<std::initializer_list<i64>> rows) {
    IntMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.cols) throw ShapeError("from_rows: ragged row lengths");
        m.a.insert(m.a.end(), row.begin(), row.end());
    }
    return ProjMatrix(std::move(m));
}

ProjMatrix proj_matmul(const ProjMatrix& x, const ProjMatrix& y) {
    return ProjMatrix(matmul(x.rep(), y.rep()));
}

i64 determinant(const ProjMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw ShapeError("determinant needs a 2x2 matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    return checked_sub(checked_mul(m.at(0, 0), m.at(1, 1)), checked_mul(m.at(0, 1), m.at(1, 0)));
}

std::string to_json(const ProjMatrix& m) {
    if (m.rows() != 2) throw ShapeError("json form needs 2 rows, got " + std::to_string(m.rows()));
    unsigned c = static_cast<unsigned>(m.cols());
    if (c == 0 || !std::has_single_bit(c))
        throw ShapeError("json form needs a power-of-two column count, got " + std::to_string(m.cols()));
    nlohmann::json j;
    j["n"] = std::countr_zero(c);
    j["rows"] = nlohmann::json::array();
    for (int r = 0; r < 2; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(r, k));
        j["rows"].push_back(std::move(row));
    }
    return j.dump();
}

ProjMatrix proj_matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("bad matrix json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw SyntaxError("matrix json needs object keys \"n\" and \"rows\"");
    if (!j["n"].is_number_integer()) throw SyntaxError("matrix json: \"n\" must be an integer");
    i64 n = j["n"].get<i64>();
    if (n < 0 || n > 20) throw ShapeError("matrix json: n out of range: " + std::to_string(n));
    int cols = 1 << static_cast<int>(n);
    const auto& rows = j["rows"];
    if (!rows.is_array() || rows.size() != 2) throw ShapeError("matrix json: \"rows\" must hold exactly 2 rows");
    IntMatrix m = IntMatrix::zeros(2, cols);
    for (int r = 0; r < 2; ++r) {
        const auto& row = rows[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ShapeError("matrix json: row " + std::to_string(r) + " must have " + std::to_string(cols) +
                             " entries");
        for (int c = 0; c < cols; ++c) {
            const auto& cell = row[static_cast<size_t>(c)];
            if (!cell.is_number_integer()) throw SyntaxError("matrix json: entries must be integers");
            m.at(r, c) = cell.get<i64>();
        }
    }
    return ProjMatrix(std::move(m));
}

std::string to_text(const ProjMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) out << ", ";
        out << "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ", ";
            out << m.at(r, c);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

} // namespace tanglekit
