#include "laq/double_complex.hpp"

#include <algorithm>

#include "laq/errors.hpp"

namespace laq {
namespace {

// rows annihilating the subspace: x ∈ s iff ann(s) · x = 0
SparseMatrix annihilator_rows(const Subspace& s) { return kernel(s.as_rows()).as_rows(); }

SparseMatrix rewrite_in_bases(const SparseMatrix& m, const Subspace& source,
                              const Subspace& target, const char* what) {
    std::vector<Vec> cols;
    cols.reserve(source.dim());
    for (const auto& v : source.basis()) {
        auto c = coordinates(target, m.apply(v));
        if (!c) throw ActionNotCompatible(std::string(what) + " does not preserve the subspaces");
        cols.push_back(std::move(*c));
    }
    return SparseMatrix::from_columns(target.dim(), cols);
}

}  // namespace

DoubleComplex assemble(LANerve& nerve, std::size_t p_max, std::size_t q_max) {
    DoubleComplex c;
    c.p_max = p_max;
    c.q_max = q_max;
    c.blocks.assign(p_max + 1, std::vector<Block>(q_max + 1));
    c.delta.assign(p_max + 1, std::vector<SparseMatrix>(q_max + 1));
    c.psi.assign(p_max + 1, std::vector<SparseMatrix>(q_max + 1));

    for (std::size_t q = 0; q <= q_max; ++q) {
        const NerveAlgebroid& lvl = nerve.level(static_cast<std::uint32_t>(q));
        for (std::size_t p = 0; p <= p_max; ++p) {
            Block b;
            b.tuple_offset.push_back(0);
            for (std::size_t t = 0; t < lvl.fibers.size(); ++t) {
                const auto monos = exterior_basis(
                    static_cast<std::uint32_t>(lvl.fibers[t].basis.dim()),
                    static_cast<std::uint32_t>(p));
                for (const auto& m : monos) b.labels.push_back({t, m});
                b.tuple_offset.push_back(b.labels.size());
            }
            b.dim = b.labels.size();
            c.blocks[p][q] = std::move(b);
        }
    }

    // ψ: blockwise matrices of the lifted differentials
    for (std::size_t p = 0; p <= p_max; ++p)
        for (std::size_t q = 0; q <= q_max; ++q) {
            if (p == p_max) {
                c.psi[p][q] = SparseMatrix(0, c.blocks[p][q].dim);
                continue;
            }
            const LiftedField& lift = nerve.lifted(static_cast<std::uint32_t>(q));
            std::vector<SparseMatrix::Triplet> ts;
            for (std::size_t t = 0; t < lift.fields.size(); ++t) {
                const SparseMatrix d =
                    derivation_matrix(lift.fields[t], static_cast<std::uint32_t>(p));
                const std::size_t r0 = c.blocks[p + 1][q].tuple_offset[t];
                const std::size_t c0 = c.blocks[p][q].tuple_offset[t];
                for (std::size_t r = 0; r < d.rows(); ++r)
                    for (const auto& [col, v] : d.row_entries(r))
                        ts.push_back({r0 + r, c0 + col, v});
            }
            c.psi[p][q] =
                SparseMatrix(c.blocks[p + 1][q].dim, c.blocks[p][q].dim, ts);
        }

    // δ: alternating sums of exterior pullbacks along the faces
    for (std::size_t p = 0; p <= p_max; ++p) {
        c.delta[p][0] = SparseMatrix(c.blocks[p][0].dim, 0);
        for (std::size_t q = 1; q <= q_max; ++q) {
            const NerveAlgebroid& lvl = nerve.level(static_cast<std::uint32_t>(q));
            std::vector<SparseMatrix::Triplet> ts;
            for (std::size_t t = 0; t < lvl.fibers.size(); ++t) {
                for (std::uint32_t i = 0; i <= q; ++i) {
                    const SparseMatrix& F =
                        nerve.face_matrix(static_cast<std::uint32_t>(q), i, t);
                    const std::size_t s = nerve.face_tuple(static_cast<std::uint32_t>(q), i, t);
                    const SparseMatrix P = exterior_pullback(static_cast<std::uint32_t>(p), F);
                    const Rational sign = (i % 2 == 0) ? 1 : -1;
                    const std::size_t r0 = c.blocks[p][q].tuple_offset[t];
                    const std::size_t c0 = c.blocks[p][q - 1].tuple_offset[s];
                    for (std::size_t r = 0; r < P.rows(); ++r)
                        for (const auto& [col, v] : P.row_entries(r))
                            ts.push_back({r0 + r, c0 + col, sign * v});
                }
            }
            c.delta[p][q] =
                SparseMatrix(c.blocks[p][q].dim, c.blocks[p][q - 1].dim, ts);
        }
    }

    if (auto r = verify_double_complex(c); !r)
        throw IdentityViolation("double-complex identity " + r.identity + " fails at block (" +
                                    std::to_string(r.p) + ", " + std::to_string(r.q) + ")",
                                r.p, r.q);
    return c;
}

DoubleComplex assemble(const LAGroupoid& l, std::size_t p_max, std::size_t q_max) {
    LANerve nerve(l);
    return assemble(nerve, p_max, q_max);
}

IdentityCheckResult verify_double_complex(const DoubleComplex& c) {
    for (std::size_t p = 0; p <= c.p_max; ++p)
        for (std::size_t q = 0; q <= c.q_max; ++q) {
            if (q + 2 <= c.q_max && !(c.delta_out(p, q + 1) * c.delta_out(p, q)).is_zero())
                return {false, "delta.delta", p, q};
            if (p + 2 <= c.p_max && !(c.psi_out(p + 1, q) * c.psi_out(p, q)).is_zero())
                return {false, "psi.psi", p, q};
            if (p + 1 <= c.p_max && q + 1 <= c.q_max &&
                c.delta_out(p + 1, q) * c.psi_out(p, q) != c.psi_out(p, q + 1) * c.delta_out(p, q))
                return {false, "commutation", p, q};
        }
    const std::size_t nmax = std::min(c.p_max, c.q_max);
    for (std::size_t n = 0; n + 2 <= nmax; ++n)
        if (!(total_matrix(c, n + 1) * total_matrix(c, n)).is_zero())
            return {false, "total", n, 0};
    return {true, "", 0, 0};
}

SparseMatrix total_matrix(const DoubleComplex& c, std::size_t n) {
    if (n + 1 > std::min(c.p_max, c.q_max))
        throw WindowTooSmall("total degree " + std::to_string(n) +
                             " needs a window of at least (" + std::to_string(n + 1) + ", " +
                             std::to_string(n + 1) + ")");
    std::vector<std::size_t> src_off(1, 0), dst_off(1, 0);
    for (std::size_t p = 0; p <= n; ++p)
        src_off.push_back(src_off.back() + c.block(p, n - p).dim);
    for (std::size_t p = 0; p <= n + 1; ++p)
        dst_off.push_back(dst_off.back() + c.block(p, n + 1 - p).dim);

    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t p = 0; p <= n; ++p) {
        const std::size_t q = n - p;
        const SparseMatrix& up = c.psi_out(p, q);  // to block p+1
        for (std::size_t r = 0; r < up.rows(); ++r)
            for (const auto& [col, v] : up.row_entries(r))
                ts.push_back({dst_off[p + 1] + r, src_off[p] + col, v});
        const SparseMatrix& across = c.delta_out(p, q);  // to block p, sign (−1)^p
        const Rational sign = (p % 2 == 0) ? 1 : -1;
        for (std::size_t r = 0; r < across.rows(); ++r)
            for (const auto& [col, v] : across.row_entries(r))
                ts.push_back({dst_off[p] + r, src_off[p] + col, sign * v});
    }
    return SparseMatrix(dst_off.back(), src_off.back(), ts);
}

CohomologyTable total_cohomology(const DoubleComplex& c, std::size_t N) {
    if (c.p_max < N + 1 || c.q_max < N + 1)
        throw WindowTooSmall("degree " + std::to_string(N) + " needs window at least (" +
                             std::to_string(N + 1) + ", " + std::to_string(N + 1) + ")");
    CohomologyTable table;
    table.p_window = c.p_max;
    table.q_window = c.q_max;
    std::size_t prev_rank = 0;
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t dim = 0;
        for (std::size_t p = 0; p <= n; ++p) dim += c.block(p, n - p).dim;
        const std::size_t r = rank(total_matrix(c, n));
        table.dims.push_back(dim - r - prev_rank);
        prev_rank = r;
    }
    return table;
}

namespace {

std::size_t e1_dim(const SparseMatrix& out, const SparseMatrix& in) {
    return (out.cols() - rank(out)) - rank(in);
}

}  // namespace

SpectralPage e1_page(const DoubleComplex& c, Orientation orientation) {
    SpectralPage pg;
    pg.page = 1;
    pg.orientation = orientation;
    pg.dims.assign(c.p_max + 1, std::vector<std::size_t>(c.q_max + 1, 0));
    pg.valid.assign(c.p_max + 1, std::vector<bool>(c.q_max + 1, false));
    for (std::size_t p = 0; p <= c.p_max; ++p)
        for (std::size_t q = 0; q <= c.q_max; ++q) {
            if (orientation == Orientation::delta_first) {
                if (q >= c.q_max) continue;
                pg.valid[p][q] = true;
                pg.dims[p][q] = e1_dim(c.delta_out(p, q), c.delta_in(p, q));
            } else {
                if (p >= c.p_max) continue;
                pg.valid[p][q] = true;
                const SparseMatrix in =
                    p >= 1 ? c.psi_out(p - 1, q) : SparseMatrix(c.block(p, q).dim, 0);
                pg.dims[p][q] = e1_dim(c.psi_out(p, q), in);
            }
        }
    return pg;
}

SpectralPage e2_page(const DoubleComplex& c, Orientation orientation) {
    SpectralPage pg;
    pg.page = 2;
    pg.orientation = orientation;
    pg.dims.assign(c.p_max + 1, std::vector<std::size_t>(c.q_max + 1, 0));
    pg.valid.assign(c.p_max + 1, std::vector<bool>(c.q_max + 1, false));

    for (std::size_t p = 0; p <= c.p_max; ++p)
        for (std::size_t q = 0; q <= c.q_max; ++q) {
            if (p >= c.p_max || q >= c.q_max) continue;
            pg.valid[p][q] = true;

            if (orientation == Orientation::delta_first) {
                // E1 classes: ker δ / im δ; induced d1 = ψ to block (p+1, q)
                const Subspace Z = kernel(c.delta_out(p, q));
                const Subspace B = image(c.delta_in(p, q));
                const Subspace Bnext = image(c.delta_in(p + 1, q));
                const Subspace W =
                    intersect(Z, kernel(annihilator_rows(Bnext) * c.psi_out(p, q)));
                Subspace V = B;
                if (p >= 1)
                    V = join(V, map_subspace(c.psi_out(p - 1, q),
                                             kernel(c.delta_out(p - 1, q))));
                pg.dims[p][q] = subquotient_dim(W, V);
            } else {
                // E1 classes: ker ψ / im ψ; induced d1 = δ to block (p, q+1)
                const SparseMatrix psi_in =
                    p >= 1 ? c.psi_out(p - 1, q) : SparseMatrix(c.block(p, q).dim, 0);
                const SparseMatrix psi_in_next =
                    p >= 1 ? c.psi_out(p - 1, q + 1) : SparseMatrix(c.block(p, q + 1).dim, 0);
                const Subspace Z = kernel(c.psi_out(p, q));
                const Subspace B = image(psi_in);
                const Subspace Bnext = image(psi_in_next);
                const Subspace W =
                    intersect(Z, kernel(annihilator_rows(Bnext) * c.delta_out(p, q)));
                Subspace V = B;
                if (q >= 1)
                    V = join(V, map_subspace(c.delta_out(p, q - 1),
                                             kernel(c.psi_out(p, q - 1))));
                pg.dims[p][q] = subquotient_dim(W, V);
            }
        }
    return pg;
}

RestrictedComplex restrict_complex(const DoubleComplex& c,
                                   const std::vector<std::vector<Subspace>>& bases) {
    if (bases.size() != c.p_max + 1)
        throw AmbientMismatch("basis grid does not match the window");
    for (std::size_t p = 0; p <= c.p_max; ++p) {
        if (bases[p].size() != c.q_max + 1)
            throw AmbientMismatch("basis grid does not match the window");
        for (std::size_t q = 0; q <= c.q_max; ++q)
            if (bases[p][q].ambient_dim() != c.block(p, q).dim)
                throw AmbientMismatch("basis ambient dimension does not match block (" +
                                      std::to_string(p) + ", " + std::to_string(q) + ")");
    }

    RestrictedComplex out{DoubleComplex{}, bases};
    DoubleComplex& r = out.complex;
    r.p_max = c.p_max;
    r.q_max = c.q_max;
    r.blocks.assign(c.p_max + 1, std::vector<Block>(c.q_max + 1));
    r.delta.assign(c.p_max + 1, std::vector<SparseMatrix>(c.q_max + 1));
    r.psi.assign(c.p_max + 1, std::vector<SparseMatrix>(c.q_max + 1));

    for (std::size_t p = 0; p <= c.p_max; ++p)
        for (std::size_t q = 0; q <= c.q_max; ++q)
            r.blocks[p][q] = Block{bases[p][q].dim(), {}, {}};

    for (std::size_t p = 0; p <= c.p_max; ++p) {
        r.delta[p][0] = SparseMatrix(r.blocks[p][0].dim, 0);
        for (std::size_t q = 1; q <= c.q_max; ++q)
            r.delta[p][q] =
                rewrite_in_bases(c.delta[p][q], bases[p][q - 1], bases[p][q], "delta");
    }
    for (std::size_t q = 0; q <= c.q_max; ++q) {
        for (std::size_t p = 0; p < c.p_max; ++p)
            r.psi[p][q] = rewrite_in_bases(c.psi[p][q], bases[p][q], bases[p + 1][q], "psi");
        r.psi[c.p_max][q] = SparseMatrix(0, r.blocks[c.p_max][q].dim);
    }
    return out;
}

RestrictedComplex invariant_subcomplex(const DoubleComplex& c, const ComplexAction& action) {
    for (const auto& gen : action.action) {
        if (gen.size() != c.p_max + 1)
            throw ActionNotCompatible("action grid does not match the window");
        for (std::size_t p = 0; p <= c.p_max; ++p) {
            if (gen[p].size() != c.q_max + 1)
                throw ActionNotCompatible("action grid does not match the window");
            for (std::size_t q = 0; q <= c.q_max; ++q) {
                const SparseMatrix& A = gen[p][q];
                if (A.rows() != c.block(p, q).dim || A.cols() != c.block(p, q).dim)
                    throw ActionNotCompatible("action block has wrong shape at (" +
                                              std::to_string(p) + ", " + std::to_string(q) + ")");
                if (q < c.q_max && c.delta_out(p, q) * A != gen[p][q + 1] * c.delta_out(p, q))
                    throw ActionNotCompatible("action does not commute with delta at (" +
                                              std::to_string(p) + ", " + std::to_string(q) + ")");
                if (p < c.p_max && c.psi_out(p, q) * A != gen[p + 1][q] * c.psi_out(p, q))
                    throw ActionNotCompatible("action does not commute with psi at (" +
                                              std::to_string(p) + ", " + std::to_string(q) + ")");
            }
        }
    }

    std::vector<std::vector<Subspace>> bases;
    bases.reserve(c.p_max + 1);
    for (std::size_t p = 0; p <= c.p_max; ++p) {
        std::vector<Subspace> row;
        row.reserve(c.q_max + 1);
        for (std::size_t q = 0; q <= c.q_max; ++q) {
            const std::size_t d = c.block(p, q).dim;
            SparseMatrix stacked(0, d);
            for (const auto& gen : action.action)
                stacked = vstack(stacked, gen[p][q] - SparseMatrix::identity(d));
            row.push_back(kernel(stacked));
        }
        bases.push_back(std::move(row));
    }
    return restrict_complex(c, bases);
}

}  // namespace laq
