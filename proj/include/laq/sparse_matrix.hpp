#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "laq/rational.hpp"

namespace laq {

// Sparse rational matrix, row-major. Immutable after construction; every
// operation returns a fresh matrix. Explicit zeros are never stored.
class SparseMatrix {
public:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        Rational value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    // duplicate (row, col) pairs accumulate
    SparseMatrix(std::size_t rows, std::size_t cols, const std::vector<Triplet>& entries);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
    static SparseMatrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzero_count() const;
    bool is_zero() const;

    Rational at(std::size_t r, std::size_t c) const;
    const std::map<std::size_t, Rational>& row_entries(std::size_t r) const;
    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;

    SparseMatrix transpose() const;
    SparseMatrix scaled(const Rational& s) const;
    Vec apply(const Vec& x) const;

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    // data_[r] holds the nonzero entries of row r keyed by column
    std::vector<std::map<std::size_t, Rational>> data_;

    void set_accumulate(std::size_t r, std::size_t c, const Rational& v);
};

// [a | b] side by side; row counts must agree
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
// a on top of b; column counts must agree
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);
// [a 0; 0 b]
SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);
// Kronecker product: (a ⊗ b)[(i·rb + k), (j·cb + l)] = a[i,j]·b[k,l]
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace laq
