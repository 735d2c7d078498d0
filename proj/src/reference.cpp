#include "laq/reference.hpp"

#include <algorithm>
#include <map>

#include "laq/errors.hpp"

namespace laq::reference {
namespace {

std::vector<Vec> to_dense(const SparseMatrix& m) {
    std::vector<Vec> rows(m.rows(), Vec(m.cols(), Rational(0)));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row_entries(r)) rows[r][c] = v;
    return rows;
}

std::size_t dense_rank_rows(std::vector<Vec> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// level-q tuples by arrow index, lexicographic; level 0 lists the objects
std::vector<std::vector<std::uint32_t>> tuples_brute(const FiniteGroupoid& g, std::uint32_t q) {
    std::vector<std::vector<std::uint32_t>> out;
    if (q == 0) {
        for (std::uint32_t x = 0; x < g.object_count(); ++x) out.push_back({x});
        return out;
    }
    std::vector<std::vector<std::uint32_t>> partial = {{}};
    for (std::uint32_t step = 0; step < q; ++step) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& t : partial)
            for (std::uint32_t a = 0; a < g.arrow_count(); ++a) {
                if (!t.empty() && g.src(t.back()) != g.tgt(a)) continue;
                auto copy = t;
                copy.push_back(a);
                next.push_back(std::move(copy));
            }
        partial = std::move(next);
    }
    return partial;
}

std::vector<std::uint32_t> face_brute(const FiniteGroupoid& g, std::uint32_t q, std::uint32_t i,
                                      const std::vector<std::uint32_t>& t) {
    if (q == 1) return {i == 0 ? g.src(t[0]) : g.tgt(t[0])};
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < q; ++k) {
        if (i == 0 && k == 0) continue;
        if (i == q && k == q - 1) continue;
        if (0 < i && i < q && k == i - 1) {
            out.push_back(g.mult_or_throw(t[k], t[k + 1]));
            ++k;
            continue;
        }
        out.push_back(t[k]);
    }
    return out;
}

// subsets of {0..n-1} of size p, lexicographic
std::vector<std::vector<std::uint32_t>> subsets(std::uint32_t n, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> out;
    if (p > n) return out;
    std::vector<std::uint32_t> cur(p);
    for (std::uint32_t i = 0; i < p; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (p == 0) break;
        std::int64_t i = p - 1;
        while (i >= 0 && cur[i] == n - p + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < p; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Rational det_brute(const std::vector<Vec>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational det = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0] == 0) continue;
        std::vector<Vec> minor;
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr == r) continue;
            minor.push_back(Vec(m[rr].begin() + 1, m[rr].end()));
        }
        const Rational cof = det_brute(minor);
        det += (r % 2 == 0 ? cof : -cof) * m[r][0];
    }
    return det;
}

}  // namespace

std::size_t dense_rank(const SparseMatrix& m) { return dense_rank_rows(to_dense(m)); }

bool jacobi_brute(const LieAlgebra& g) {
    std::vector<Vec> basis;
    for (std::uint32_t i = 0; i < g.dim(); ++i) {
        Vec e(g.dim(), Rational(0));
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    for (std::uint32_t i = 0; i < g.dim(); ++i)
        for (std::uint32_t j = 0; j < g.dim(); ++j)
            for (std::uint32_t k = 0; k < g.dim(); ++k) {
                Vec sum = g.bracket(g.bracket(basis[i], basis[j]), basis[k]);
                const Vec s2 = g.bracket(g.bracket(basis[j], basis[k]), basis[i]);
                const Vec s3 = g.bracket(g.bracket(basis[k], basis[i]), basis[j]);
                for (std::uint32_t t = 0; t < g.dim(); ++t) {
                    sum[t] += s2[t] + s3[t];
                    if (sum[t] != 0) return false;
                }
            }
    return true;
}

SparseMatrix nerve_coboundary_brute(const FiniteGroupoid& g, std::uint32_t q) {
    const auto source = tuples_brute(g, q - 1);
    const auto target = tuples_brute(g, q);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < source.size(); ++i) index[source[i]] = i;

    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t t = 0; t < target.size(); ++t)
        for (std::uint32_t i = 0; i <= q; ++i) {
            const auto f = face_brute(g, q, i, target[t]);
            ts.push_back({t, index.at(f), Rational(i % 2 == 0 ? 1 : -1)});
        }
    return SparseMatrix(target.size(), source.size(), ts);
}

std::vector<std::size_t> nerve_cohomology_brute(const FiniteGroupoid& g, std::size_t N) {
    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (std::uint32_t n = 0; n <= N; ++n) {
        const std::size_t dim = tuples_brute(g, n).size();
        const std::size_t out_rank = dense_rank(nerve_coboundary_brute(g, n + 1));
        dims.push_back(dim - out_rank - prev_rank);
        prev_rank = out_rank;
    }
    return dims;
}

SparseMatrix ce_coboundary_brute(const LieAlgebra& g, std::uint32_t p) {
    const auto cols_basis = subsets(g.dim(), p);
    const auto rows_basis = subsets(g.dim(), p + 1);

    std::map<std::vector<std::uint32_t>, std::size_t> col_index;
    for (std::size_t i = 0; i < cols_basis.size(); ++i) col_index[cols_basis[i]] = i;

    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t r = 0; r < rows_basis.size(); ++r) {
        const auto& T = rows_basis[r];
        for (std::uint32_t i = 0; i + 1 <= p; ++i)
            for (std::uint32_t j = i + 1; j <= p; ++j) {
                const Vec br = g.bracket_basis(T[i], T[j]);
                std::vector<std::uint32_t> rest;
                for (std::uint32_t k = 0; k <= p; ++k)
                    if (k != i && k != j) rest.push_back(T[k]);
                for (std::uint32_t k = 0; k < g.dim(); ++k) {
                    if (br[k] == 0) continue;
                    if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
                    std::vector<std::uint32_t> S = rest;
                    const auto pos = std::lower_bound(S.begin(), S.end(), k);
                    const std::size_t inserted = pos - S.begin();
                    S.insert(pos, k);
                    Rational coeff = br[k];
                    if ((i + j) % 2 == 1) coeff = -coeff;
                    if (inserted % 2 == 1) coeff = -coeff;
                    ts.push_back({r, col_index.at(S), coeff});
                }
            }
    }
    return SparseMatrix(rows_basis.size(), cols_basis.size(), ts);
}

std::vector<std::size_t> ce_dims_brute(const LieAlgebra& g, std::uint32_t p_max) {
    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (std::uint32_t p = 0; p <= p_max; ++p) {
        const std::size_t dim = subsets(g.dim(), p).size();
        const std::size_t out_rank = dense_rank(ce_coboundary_brute(g, p));
        dims.push_back(dim - out_rank - prev_rank);
        prev_rank = out_rank;
    }
    return dims;
}

SparseMatrix form_action_brute(const SparseMatrix& m, std::uint32_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(m.cols());
    const auto basis = subsets(n, p);
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t row = 0; row < basis.size(); ++row)
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const auto& S = basis[row];  // evaluation arguments
            const auto& T = basis[col];  // the form being pulled back
            std::vector<Vec> minor(p, Vec(p, Rational(0)));
            for (std::uint32_t a = 0; a < p; ++a)
                for (std::uint32_t b = 0; b < p; ++b) minor[a][b] = m.at(T[a], S[b]);
            const Rational d = det_brute(minor);
            if (d != 0) ts.push_back({row, col, d});
        }
    return SparseMatrix(basis.size(), basis.size(), ts);
}

std::vector<std::size_t> invariant_ce_dims_brute(const LieAlgebra& g,
                                                 const std::vector<SparseMatrix>& group,
                                                 std::uint32_t p_max) {
    if (group.empty()) throw EmptySet("the group element list must include the identity");

    // averaging projector onto invariant forms per degree
    std::vector<SparseMatrix> proj;
    for (std::uint32_t p = 0; p <= p_max; ++p) {
        const std::size_t dim = subsets(g.dim(), p).size();
        SparseMatrix sum(dim, dim);
        for (const auto& m : group) sum = sum + form_action_brute(m, p);
        proj.push_back(sum.scaled(Rational(1, Int(group.size()))));
    }

    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (std::uint32_t p = 0; p <= p_max; ++p) {
        const std::size_t inv_dim = dense_rank(proj[p]);
        const std::size_t out_rank = dense_rank(ce_coboundary_brute(g, p) * proj[p]);
        dims.push_back(inv_dim - out_rank - prev_rank);
        prev_rank = out_rank;
    }
    return dims;
}

}  // namespace laq::reference
