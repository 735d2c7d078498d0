#include "laq/lie_algebra.hpp"

#include <algorithm>

#include "laq/errors.hpp"

namespace laq {

LieAlgebra::LieAlgebra(
    std::uint32_t dim,
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Rational>>& entries)
    : dim_(dim) {
    for (const auto& [i, j, k, c] : entries) {
        if (i >= j) throw MalformedInput("structure constants must be given with i < j");
        if (j >= dim_ || k >= dim_) throw IndexOutOfRange("structure constant index outside basis");
        auto [it, inserted] = table_.try_emplace({i, j}, Vec(dim_, Rational(0)));
        it->second[k] += c;
    }
    for (auto it = table_.begin(); it != table_.end();) {
        const bool zero = std::all_of(it->second.begin(), it->second.end(),
                                      [](const Rational& x) { return x == 0; });
        it = zero ? table_.erase(it) : std::next(it);
    }
}

Vec LieAlgebra::bracket_basis(std::uint32_t i, std::uint32_t j) const {
    if (i >= dim_ || j >= dim_) throw IndexOutOfRange("basis index outside algebra");
    if (i == j) return Vec(dim_, Rational(0));
    const bool flip = i > j;
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return Vec(dim_, Rational(0));
    Vec v = it->second;
    if (flip)
        for (auto& x : v) x = -x;
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw AmbientMismatch("vector length does not match algebra dimension");
    Vec out(dim_, Rational(0));
    for (const auto& [ij, v] : table_) {
        const Rational c = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
        if (c == 0) continue;
        for (std::uint32_t k = 0; k < dim_; ++k) out[k] += c * v[k];
    }
    return out;
}

JacobiResult validate_lie(const LieAlgebra& g) {
    const std::uint32_t n = g.dim();
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k) {
                Vec ei(n, Rational(0)), ej(n, Rational(0)), ek(n, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Vec s = g.bracket(g.bracket_basis(i, j), ek);
                const Vec t = g.bracket(g.bracket_basis(j, k), ei);
                const Vec u = g.bracket(g.bracket_basis(k, i), ej);
                bool zero = true;
                for (std::uint32_t m = 0; m < n; ++m) {
                    s[m] += t[m] + u[m];
                    if (s[m] != 0) zero = false;
                }
                if (!zero) return {false, std::array<std::uint32_t, 3>{i, j, k}, std::move(s)};
            }
    return {true, std::nullopt, std::nullopt};
}

ShiftedAlgebra shifted_frame(const LieAlgebra& g) {
    const ExteriorFrame frame{g.dim()};
    DerivationSpec d{frame, 1, {}};
    d.images.reserve(g.dim());
    for (std::uint32_t k = 0; k < g.dim(); ++k) d.images.emplace_back(frame);
    for (const auto& [ij, v] : g.table()) {
        const Monomial m({ij.first, ij.second});
        for (std::uint32_t k = 0; k < g.dim(); ++k) {
            if (v[k] == 0) continue;
            d.images[k] = d.images[k] + Element(frame, {{m, -v[k]}});
        }
    }
    return {frame, std::move(d)};
}

SparseMatrix ce_matrix(const LieAlgebra& g, std::uint32_t p) {
    return derivation_matrix(shifted_frame(g).differential, p);
}

std::vector<std::size_t> ce_cohomology_dims(const LieAlgebra& g, std::uint32_t p_max) {
    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (std::uint32_t p = 0; p <= p_max; ++p) {
        const SparseMatrix d = ce_matrix(g, p);
        const std::size_t r = rank(d);
        dims.push_back(d.cols() - r - prev_rank);
        prev_rank = r;
    }
    return dims;
}

MorphismResult is_lie_morphism(const LinearLieMorphism& f) {
    if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
        throw AmbientMismatch("morphism matrix shape does not match the algebras");
    const std::uint32_t n = f.source.dim();
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            Vec lhs = f.matrix.apply(f.source.bracket_basis(i, j));
            const Vec rhs = f.target.bracket(f.matrix.column(i), f.matrix.column(j));
            bool zero = true;
            for (std::uint32_t k = 0; k < f.target.dim(); ++k) {
                lhs[k] -= rhs[k];
                if (lhs[k] != 0) zero = false;
            }
            if (!zero) return {false, std::make_pair(i, j), std::move(lhs)};
        }
    return {true, std::nullopt, std::nullopt};
}

RelatednessResult is_related(const SparseMatrix& L, const DerivationSpec& d_source,
                             const DerivationSpec& d_target) {
    check_derivation(d_source);
    check_derivation(d_target);
    if (d_source.frame.generators != L.cols() || d_target.frame.generators != L.rows())
        throw FrameMismatch("matrix shape does not match the derivation frames");
    for (std::uint32_t j = 0; j < d_target.frame.generators; ++j) {
        Element via_target = substitute(L, d_target.images[j]);
        Element via_source = apply_derivation(d_source, substitute(L, Element::generator(d_target.frame, j)));
        Element r = via_target - via_source;
        if (!r.is_zero()) return {false, j, std::move(r)};
    }
    return {true, std::nullopt, std::nullopt};
}

void check_bundle(const LieFiberBundle& b) {
    if (b.base.size() != b.fibers.size())
        throw MalformedInput("bundle must carry one fiber per base point");
    if (b.base.empty()) throw EmptySet("bundle base is empty");
    for (std::size_t i = 1; i < b.base.size(); ++i)
        if (b.base[i - 1] >= b.base[i])
            throw MalformedInput("bundle base labels must be strictly increasing");
}

BundleJacobiResult validate_bundle(const LieFiberBundle& b) {
    check_bundle(b);
    for (std::size_t i = 0; i < b.fibers.size(); ++i) {
        JacobiResult r = validate_lie(b.fibers[i]);
        if (!r.ok) return {false, b.base[i], std::move(r)};
    }
    return {true, std::nullopt, {}};
}

}  // namespace laq
