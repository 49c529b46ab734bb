#ifndef CANONEQ_LINALG_HPP
#define CANONEQ_LINALG_HPP

#include <vector>

#include "canoneq/cyclotomic.hpp"
#include "canoneq/errors.hpp"

namespace canoneq {

inline bool field_is_zero(const Rational& a) { return a == 0; }
inline Rational field_inv(const Rational& a) {
    if (a == 0) throw division_by_zero();
    return Rational(1) / a;
}
inline bool field_is_zero(const Cyclotomic& a) { return a.is_zero(); }
inline Cyclotomic field_inv(const Cyclotomic& a) { return a.inverse(); }
inline Rational field_from_int(const Rational&, long v) { return Rational(v); }
inline Cyclotomic field_from_int(const Cyclotomic&, long v) { return Cyclotomic(v); }

/// In-place reduced row echelon form; returns pivot column indices.
template <typename K>
std::vector<int> rref(std::vector<std::vector<K>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && field_is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        K inv = field_inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || field_is_zero(m[i][c])) continue;
            K f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

template <typename K>
size_t rank(std::vector<std::vector<K>> m) {
    return rref(m).size();
}

/// Solves A x = b (A given by rows). Returns empty optional when inconsistent.
/// Free variables are set to zero.
template <typename K>
std::optional<std::vector<K>> solve(const std::vector<std::vector<K>>& a, const std::vector<K>& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<K>> m(rows, std::vector<K>(cols + 1, K()));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == (int)cols) return std::nullopt;
    std::vector<K> x(cols, K());
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
    return x;
}

/// Dense matrix over the cyclotomic scalars.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Cyclotomic> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    Cyclotomic& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Cyclotomic& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols != o.rows) throw error("matrix product: dimension mismatch");
        Matrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Cyclotomic& v = at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += v * o.at(k, j);
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Cyclotomic trace() const {
        Cyclotomic t;
        for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }

    Matrix inverse() const {
        if (rows != cols) throw error("matrix inverse: not square");
        std::vector<std::vector<Cyclotomic>> m(rows, std::vector<Cyclotomic>(2 * cols));
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) m[i][j] = at(i, j);
            m[i][cols + i] = Cyclotomic(1);
        }
        auto piv = rref(m);
        if ((int)piv.size() != rows || piv.back() >= cols)
            throw error("matrix inverse: singular matrix");
        Matrix r(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(i, j) = m[i][cols + j];
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

} // namespace canoneq

#endif
