#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "excseq/rational.hpp"

namespace excseq {

using IntVec = std::vector<long long>;

// Dense matrix over exact rationals. Row-major, zero-based.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    static QMat from_int_rows(const std::vector<IntVec>& rows) {
        QMat m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = Rat(rows[i][j]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMat transposed() const {
        QMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    QMat operator*(const QMat& o) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

// Row echelon rank via exact Gaussian elimination.
std::size_t rank(QMat m);

// Basis of the right null space; each returned vector is an integer-cleared
// column of length m.cols(). Basis vectors are linearly independent and span
// ker(m) exactly.
std::vector<std::vector<Rat>> kernel_basis(const QMat& m);

// Solve m x = b. Returns nullopt if inconsistent. When the column rank is not
// full the returned solution sets the free variables to zero.
std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b);

// Inverse of a square invertible matrix; throws IntegrityError if singular.
QMat inverse(const QMat& m);

// Determinant of a square matrix.
Rat determinant(QMat m);

// Integer matrix-vector product helpers used for dimension-vector arithmetic.
IntVec mat_apply_int(const QMat& m, const IntVec& v);

} // namespace excseq
