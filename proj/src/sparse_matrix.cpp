#include "laq/sparse_matrix.hpp"

#include "laq/errors.hpp"

namespace laq {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, const std::vector<Triplet>& entries)
    : rows_(rows), cols_(cols), data_(rows) {
    for (const auto& t : entries) {
        if (t.row >= rows_ || t.col >= cols_)
            throw IndexOutOfRange("matrix entry outside declared shape");
        set_accumulate(t.row, t.col, t.value);
    }
}

void SparseMatrix::set_accumulate(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto& row = data_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Rational(1));
    return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw AmbientMismatch("row length does not match column count");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.data_[r].emplace(c, rows[r][c]);
    }
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    SparseMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw AmbientMismatch("column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r)
            if (cols[c][r] != 0) m.data_[r].emplace(c, cols[c][r]);
    }
    return m;
}

std::size_t SparseMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

bool SparseMatrix::is_zero() const { return nonzero_count() == 0; }

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index outside shape");
    const auto& row = data_[r];
    auto it = row.find(c);
    return it == row.end() ? Rational(0) : it->second;
}

const std::map<std::size_t, Rational>& SparseMatrix::row_entries(std::size_t r) const {
    if (r >= rows_) throw IndexOutOfRange("row index outside shape");
    return data_[r];
}

Vec SparseMatrix::row(std::size_t r) const {
    if (r >= rows_) throw IndexOutOfRange("row index outside shape");
    Vec v(cols_, Rational(0));
    for (const auto& [c, val] : data_[r]) v[c] = val;
    return v;
}

Vec SparseMatrix::column(std::size_t c) const {
    if (c >= cols_) throw IndexOutOfRange("column index outside shape");
    Vec v(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        auto it = data_[r].find(c);
        if (it != data_[r].end()) v[r] = it->second;
    }
    return v;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, val] : data_[r]) t.data_[c].emplace(r, val);
    return t;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix m(rows_, cols_);
    if (s == 0) return m;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, val] : data_[r]) m.data_[r].emplace(c, val * s);
    return m;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw AmbientMismatch("vector length does not match column count");
    Vec y(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, val] : data_[r]) y[r] += val * x[c];
    return y;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw AmbientMismatch("matrix shapes differ in addition");
    SparseMatrix m(a.rows_, a.cols_);
    m.data_ = a.data_;
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (const auto& [c, val] : b.data_[r]) m.set_accumulate(r, c, val);
    return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw AmbientMismatch("matrix shapes differ in subtraction");
    SparseMatrix m(a.rows_, a.cols_);
    m.data_ = a.data_;
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (const auto& [c, val] : b.data_[r]) m.set_accumulate(r, c, -val);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw AmbientMismatch("inner dimensions differ in product");
    SparseMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, av] : a.data_[r]) {
            for (const auto& [c, bv] : b.data_[k]) {
                auto it = acc.find(c);
                if (it == acc.end())
                    acc.emplace(c, av * bv);
                else
                    it->second += av * bv;
            }
        }
        for (auto& [c, v] : acc)
            if (v != 0) m.data_[r].emplace(c, std::move(v));
    }
    return m;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows()) throw AmbientMismatch("row counts differ in hstack");
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row_entries(r)) ts.push_back({r, c, v});
        for (const auto& [c, v] : b.row_entries(r)) ts.push_back({r, a.cols() + c, v});
    }
    return SparseMatrix(a.rows(), a.cols() + b.cols(), ts);
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.cols()) throw AmbientMismatch("column counts differ in vstack");
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row_entries(r)) ts.push_back({r, c, v});
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (const auto& [c, v] : b.row_entries(r)) ts.push_back({a.rows() + r, c, v});
    return SparseMatrix(a.rows() + b.rows(), a.cols(), ts);
}

SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b) {
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row_entries(r)) ts.push_back({r, c, v});
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (const auto& [c, v] : b.row_entries(r)) ts.push_back({a.rows() + r, a.cols() + c, v});
    return SparseMatrix(a.rows() + b.rows(), a.cols() + b.cols(), ts);
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, av] : a.row_entries(i))
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (const auto& [l, bv] : b.row_entries(k))
                    ts.push_back({i * b.rows() + k, j * b.cols() + l, av * bv});
    return SparseMatrix(a.rows() * b.rows(), a.cols() * b.cols(), ts);
}

}  // namespace laq
