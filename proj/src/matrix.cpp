#include "excseq/matrix.hpp"

#include <numeric>

#include "excseq/errors.hpp"

namespace excseq {

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix apply shape mismatch");
    std::vector<Rat> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(QMat m) { return rref(m).size(); }

std::vector<std::vector<Rat>> kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols());
        v[free_col] = Rat(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -r.at(p, free_col);
        // Clear denominators so downstream representations stay integral.
        long long lcm = 1;
        for (const Rat& x : v) lcm = std::lcm(lcm, x.den());
        if (lcm != 1)
            for (Rat& x : v) x *= Rat(lcm);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw DimensionError("solve shape mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // row [0 .. 0 | 1]
    std::vector<Rat> x(m.cols());
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug.at(p, m.cols());
    return x;
}

QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    std::size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw IntegrityError("matrix not invertible");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Rat determinant(QMat m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rat f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

IntVec mat_apply_int(const QMat& m, const IntVec& v) {
    std::vector<Rat> rv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rv[i] = Rat(v[i]);
    std::vector<Rat> r = m.apply(rv);
    IntVec out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i].is_integer()) throw IntegrityError("expected integral matrix-vector product");
        out[i] = r[i].num();
    }
    return out;
}

} // namespace excseq
