#include "laq/linalg.hpp"

#include <algorithm>
#include <utility>

#include "laq/errors.hpp"

namespace laq {
namespace {

using IRow = std::map<std::size_t, Int>;

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// divide by the content so entries are coprime integers
void make_primitive(IRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    if (g <= 1) return;
    for (auto& [c, v] : row) v /= g;
}

IRow to_integer_row(const std::map<std::size_t, Rational>& row) {
    Int scale = 1;
    for (const auto& [c, v] : row) scale = scale / gcd(scale, denominator(v)) * denominator(v);
    IRow out;
    for (const auto& [c, v] : row) out.emplace(c, numerator(v) * (scale / denominator(v)));
    make_primitive(out);
    return out;
}

// row := a·row − b·other, then primitive
void combine(IRow& row, const Int& a, const Int& b, const IRow& other) {
    for (auto& [c, v] : row) v *= a;
    for (const auto& [c, ov] : other) {
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, -b * ov);
        } else {
            it->second -= b * ov;
            if (it->second == 0) row.erase(it);
        }
    }
    make_primitive(row);
}

struct ReducedEchelon {
    std::size_t cols = 0;
    std::vector<IRow> rows;            // primitive, positive pivot, pivots ascending, fully reduced
    std::vector<std::size_t> pivots;   // pivot column of each row
};

// Fraction-free Gauss-Jordan on primitive integer rows. Cross-multiplication
// keeps every intermediate entry integral; content reduction after each update
// controls growth. Pivot choice: among rows whose leading column is the
// current one, the fewest stored nonzeros, then the lowest original index.
// The result is the (integer-scaled) reduced echelon form, which is unique,
// so downstream bases never depend on the pivot order.
ReducedEchelon reduced_echelon(const SparseMatrix& m) {
    std::vector<IRow> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IRow row = to_integer_row(m.row_entries(r));
        if (!row.empty()) work.push_back(std::move(row));
    }

    std::vector<bool> used(work.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pivot_of;  // (pivot col, work index)

    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t best = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (used[i] || work[i].empty()) continue;
            if (work[i].begin()->first != c) continue;
            if (best == work.size() || work[i].size() < work[best].size()) best = i;
        }
        if (best == work.size()) continue;

        used[best] = true;
        pivot_of.emplace_back(c, best);
        const Int p = work[best].at(c);
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (j == best) continue;
            auto it = work[j].find(c);
            if (it == work[j].end()) continue;
            Int v = it->second;
            combine(work[j], p, v, work[best]);
        }
    }

    ReducedEchelon out;
    out.cols = m.cols();
    for (const auto& [c, idx] : pivot_of) {
        IRow row = work[idx];
        if (row.at(c) < 0)
            for (auto& [cc, v] : row) v = -v;
        out.rows.push_back(std::move(row));
        out.pivots.push_back(c);
    }
    return out;
}

Vec row_to_vec(const IRow& row, std::size_t n) {
    Vec v(n, Rational(0));
    for (const auto& [c, val] : row) v[c] = Rational(val);
    return v;
}

std::vector<Vec> echelon_row_vectors(const ReducedEchelon& re) {
    std::vector<Vec> rows;
    rows.reserve(re.rows.size());
    for (const auto& r : re.rows) rows.push_back(row_to_vec(r, re.cols));
    return rows;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vec> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
        if (v.size() != ambient_)
            throw AmbientMismatch("basis vector length does not match ambient dimension");
    if (!basis_.empty() && rank(as_rows()) != basis_.size())
        throw MalformedInput("subspace basis is linearly dependent");
}

Subspace Subspace::zero_subspace(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full_space(std::size_t ambient_dim) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec e(ambient_dim, Rational(0));
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return Subspace(ambient_dim, std::move(basis));
}

SparseMatrix Subspace::as_rows() const { return SparseMatrix::from_rows(ambient_, basis_); }

SparseMatrix Subspace::as_columns() const { return SparseMatrix::from_columns(ambient_, basis_); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient dimension");
    std::vector<Vec> rows = basis_;
    rows.push_back(v);
    return rank(SparseMatrix::from_rows(ambient_, rows)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("ambient dimensions differ");
    if (other.dim() == 0) return true;
    return rank(vstack(as_rows(), other.as_rows())) == dim();
}

bool Subspace::same_span(const Subspace& other) const {
    return dim() == other.dim() && contains(other);
}

std::size_t rank(const SparseMatrix& m) { return reduced_echelon(m).pivots.size(); }

Subspace kernel(const SparseMatrix& m) {
    const ReducedEchelon re = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : re.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols(), Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < re.rows.size(); ++r) {
            auto it = re.rows[r].find(f);
            if (it != re.rows[r].end())
                x[re.pivots[r]] = Rational(-it->second, re.rows[r].at(re.pivots[r]));
        }
        basis.push_back(std::move(x));
    }
    return Subspace(m.cols(), std::move(basis));
}

Subspace row_space(const SparseMatrix& m) {
    const ReducedEchelon re = reduced_echelon(m);
    return Subspace(m.cols(), echelon_row_vectors(re));
}

Subspace image(const SparseMatrix& m) { return row_space(m.transpose()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero_subspace(n);

    // Zassenhaus: echelonize [A|A; B|0]; rows with zero left half span a ∩ b
    std::vector<Vec> rows;
    for (const auto& v : a.basis()) {
        Vec r(2 * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = v[i];
            r[n + i] = v[i];
        }
        rows.push_back(std::move(r));
    }
    for (const auto& v : b.basis()) {
        Vec r(2 * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) r[i] = v[i];
        rows.push_back(std::move(r));
    }
    const ReducedEchelon re = reduced_echelon(SparseMatrix::from_rows(2 * n, rows));

    std::vector<Vec> inter;
    for (std::size_t r = 0; r < re.rows.size(); ++r) {
        if (re.pivots[r] < n) continue;
        Vec v(n, Rational(0));
        for (const auto& [c, val] : re.rows[r]) v[c - n] = Rational(val);
        inter.push_back(std::move(v));
    }
    return row_space(SparseMatrix::from_rows(n, inter));
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
    return row_space(vstack(a.as_rows(), b.as_rows()));
}

Subspace map_subspace(const SparseMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw AmbientMismatch("matrix does not act on this ambient space");
    std::vector<Vec> images;
    images.reserve(s.dim());
    for (const auto& v : s.basis()) images.push_back(m.apply(v));
    return row_space(SparseMatrix::from_rows(m.rows(), images));
}

std::size_t subquotient_dim(const Subspace& outer, const Subspace& inner) {
    if (outer.ambient_dim() != inner.ambient_dim())
        throw AmbientMismatch("ambient dimensions differ");
    if (!outer.contains(inner))
        throw ContainmentViolation("inner subspace is not contained in outer subspace");
    return outer.dim() - inner.dim();
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw AmbientMismatch("right-hand side length does not match");
    const std::size_t n = m.cols();
    const ReducedEchelon re =
        reduced_echelon(hstack(m, SparseMatrix::from_columns(m.rows(), {rhs})));
    Vec x(n, Rational(0));
    for (std::size_t r = 0; r < re.rows.size(); ++r) {
        if (re.pivots[r] == n) return std::nullopt;  // pivot in the augmented column
        auto it = re.rows[r].find(n);
        if (it != re.rows[r].end())
            x[re.pivots[r]] = Rational(it->second, re.rows[r].at(re.pivots[r]));
    }
    return x;
}

std::optional<Vec> coordinates(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient_dim())
        throw AmbientMismatch("vector length does not match ambient dimension");
    return solve(s.as_columns(), v);
}

}  // namespace laq
