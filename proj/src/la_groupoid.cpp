#include "laq/la_groupoid.hpp"

#include <algorithm>

#include "laq/errors.hpp"

namespace laq {
namespace {

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

// component offsets inside ⊕_i Ω_{g_i}
std::vector<std::size_t> component_offsets(const LAGroupoid& l, const ComposableTuple& t) {
    std::vector<std::size_t> off(t.arrows.size() + 1, 0);
    for (std::size_t i = 0; i < t.arrows.size(); ++i)
        off[i + 1] = off[i] + l.top.fibers[t.arrows[i]].dim();
    return off;
}

// stacked adjacency constraints src_lin(v_i) = tgt_lin(v_{i+1})
SparseMatrix constraint_matrix(const LAGroupoid& l, const ComposableTuple& t) {
    const auto off = component_offsets(l, t);
    std::size_t rows = 0;
    for (std::size_t i = 0; i + 1 < t.arrows.size(); ++i)
        rows += l.side.fibers[l.base.src(t.arrows[i])].dim();

    std::vector<SparseMatrix::Triplet> ts;
    std::size_t r0 = 0;
    for (std::size_t i = 0; i + 1 < t.arrows.size(); ++i) {
        const SparseMatrix& s = l.src_lin[t.arrows[i]];
        const SparseMatrix& tg = l.tgt_lin[t.arrows[i + 1]];
        for (std::size_t r = 0; r < s.rows(); ++r)
            for (const auto& [c, v] : s.row_entries(r)) ts.push_back({r0 + r, off[i] + c, v});
        for (std::size_t r = 0; r < tg.rows(); ++r)
            for (const auto& [c, v] : tg.row_entries(r)) ts.push_back({r0 + r, off[i + 1] + c, -v});
        r0 += s.rows();
    }
    return SparseMatrix(rows, off.back(), ts);
}

// bracket in the direct sum, componentwise
Vec componentwise_bracket(const LAGroupoid& l, const ComposableTuple& t,
                          const std::vector<std::size_t>& off, const Vec& x, const Vec& y) {
    Vec out(off.back(), Rational(0));
    for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        const LieAlgebra& fib = l.top.fibers[t.arrows[i]];
        Vec xi(x.begin() + off[i], x.begin() + off[i + 1]);
        Vec yi(y.begin() + off[i], y.begin() + off[i + 1]);
        Vec z = fib.bracket(xi, yi);
        for (std::size_t k = 0; k < z.size(); ++k) out[off[i] + k] = z[k];
    }
    return out;
}

NerveFiber build_fiber(const LAGroupoid& l, const ComposableTuple& t) {
    if (t.level == 0) {
        const LieAlgebra& a = l.side.fibers[t.object];
        return {t, Subspace::full_space(a.dim()), a};
    }
    const auto off = component_offsets(l, t);
    Subspace basis = kernel(constraint_matrix(l, t));

    const std::uint32_t d = static_cast<std::uint32_t>(basis.dim());
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Rational>> entries;
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = a + 1; b < d; ++b) {
            Vec z = componentwise_bracket(l, t, off, basis.basis()[a], basis.basis()[b]);
            auto coords = coordinates(basis, z);
            if (!coords)
                throw MalformedInput("fiber product over " + to_string(l.base, t) +
                                     " is not closed under the bracket");
            for (std::uint32_t k = 0; k < d; ++k)
                if ((*coords)[k] != 0) entries.emplace_back(a, b, k, (*coords)[k]);
        }
    return {t, std::move(basis), LieAlgebra(d, entries)};
}

}  // namespace

void check_la_shape(const LAGroupoid& l) {
    check_bundle(l.side);
    check_bundle(l.top);
    if (l.side.base.size() != l.base.object_count())
        throw MalformedInput("side algebroid base does not match the objects");
    for (std::uint32_t x = 0; x < l.base.object_count(); ++x)
        if (l.side.base[x] != l.base.object_label(x))
            throw MalformedInput("side algebroid base label mismatch at '" + l.side.base[x] + "'");
    if (l.top.base.size() != l.base.arrow_count())
        throw MalformedInput("top algebroid base does not match the arrows");
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g)
        if (l.top.base[g] != l.base.arrow_label(g))
            throw MalformedInput("top algebroid base label mismatch at '" + l.top.base[g] + "'");

    const auto dim_a = [&](std::uint32_t x) { return l.side.fibers[x].dim(); };
    const auto dim_o = [&](std::uint32_t g) { return l.top.fibers[g].dim(); };

    if (l.src_lin.size() != l.base.arrow_count() || l.tgt_lin.size() != l.base.arrow_count() ||
        l.inv_lin.size() != l.base.arrow_count() || l.unit_lin.size() != l.base.object_count())
        throw MalformedInput("linear structure map tables have wrong lengths");

    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        if (l.src_lin[g].rows() != dim_a(l.base.src(g)) || l.src_lin[g].cols() != dim_o(g))
            throw MalformedInput("src_lin shape mismatch at arrow '" + l.base.arrow_label(g) + "'");
        if (l.tgt_lin[g].rows() != dim_a(l.base.tgt(g)) || l.tgt_lin[g].cols() != dim_o(g))
            throw MalformedInput("tgt_lin shape mismatch at arrow '" + l.base.arrow_label(g) + "'");
        const std::uint32_t gi = l.base.inv(g);
        if (l.inv_lin[g].rows() != dim_o(gi) || l.inv_lin[g].cols() != dim_o(g))
            throw MalformedInput("inv_lin shape mismatch at arrow '" + l.base.arrow_label(g) + "'");
    }
    for (std::uint32_t x = 0; x < l.base.object_count(); ++x) {
        const std::uint32_t u = l.base.unit(x);
        if (l.unit_lin[x].rows() != dim_o(u) || l.unit_lin[x].cols() != dim_a(x))
            throw MalformedInput("unit_lin shape mismatch at object '" + l.base.object_label(x) +
                                 "'");
    }

    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g)
        for (std::uint32_t h = 0; h < l.base.arrow_count(); ++h) {
            const auto m = l.base.mult(g, h);
            const auto it = l.mult_lin.find({g, h});
            if (m.has_value() != (it != l.mult_lin.end()))
                throw MalformedInput("mult_lin entries must match the base multiplication table");
            if (m && (it->second.rows() != dim_o(*m) ||
                      it->second.cols() != dim_o(g) + dim_o(h)))
                throw MalformedInput("mult_lin shape mismatch at (" + l.base.arrow_label(g) +
                                     ", " + l.base.arrow_label(h) + ")");
        }
}

LACheckResult validate_la(const LAGroupoid& l) {
    if (auto r = validate_groupoid(l.base); !r)
        return {false, "base-groupoid(" + r.axiom + ")", r.witness};
    if (auto r = validate_bundle(l.side); !r)
        return {false, "side-jacobi",
                "fiber over " + *r.point + ", triple (" + std::to_string(r.fiber.triple->at(0) + 1) +
                    ", " + std::to_string(r.fiber.triple->at(1) + 1) + ", " +
                    std::to_string(r.fiber.triple->at(2) + 1) + "), defect " +
                    vec_to_string(*r.fiber.defect)};
    if (auto r = validate_bundle(l.top); !r)
        return {false, "top-jacobi",
                "fiber over " + *r.point + ", triple (" + std::to_string(r.fiber.triple->at(0) + 1) +
                    ", " + std::to_string(r.fiber.triple->at(1) + 1) + ", " +
                    std::to_string(r.fiber.triple->at(2) + 1) + "), defect " +
                    vec_to_string(*r.fiber.defect)};
    try {
        check_la_shape(l);
    } catch (const Error& e) {
        return {false, "shape", e.what()};
    }

    const auto morphism_witness = [](const MorphismResult& m) {
        return "basis pair (" + std::to_string(m.pair->first + 1) + ", " +
               std::to_string(m.pair->second + 1) + "), defect " + vec_to_string(*m.defect);
    };

    // (a) source/target maps: surjective Lie morphisms
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        const std::string label = l.base.arrow_label(g);
        if (auto m = is_lie_morphism({l.top.fibers[g], l.side.fibers[l.base.src(g)], l.src_lin[g]});
            !m)
            return {false, "src-morphism", "arrow " + label + ": " + morphism_witness(m)};
        if (rank(l.src_lin[g]) != l.side.fibers[l.base.src(g)].dim())
            return {false, "src-surjective", "arrow " + label};
        if (auto m = is_lie_morphism({l.top.fibers[g], l.side.fibers[l.base.tgt(g)], l.tgt_lin[g]});
            !m)
            return {false, "tgt-morphism", "arrow " + label + ": " + morphism_witness(m)};
        if (rank(l.tgt_lin[g]) != l.side.fibers[l.base.tgt(g)].dim())
            return {false, "tgt-surjective", "arrow " + label};
    }

    // (d) unit and inverse maps are Lie morphisms
    for (std::uint32_t x = 0; x < l.base.object_count(); ++x) {
        if (auto m = is_lie_morphism({l.side.fibers[x], l.top.fibers[l.base.unit(x)], l.unit_lin[x]});
            !m)
            return {false, "unit-morphism",
                    "object " + l.base.object_label(x) + ": " + morphism_witness(m)};
    }
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        if (auto m = is_lie_morphism({l.top.fibers[g], l.top.fibers[l.base.inv(g)], l.inv_lin[g]});
            !m)
            return {false, "inv-morphism",
                    "arrow " + l.base.arrow_label(g) + ": " + morphism_witness(m)};
    }

    // (b) unit section compatible with source and target
    for (std::uint32_t x = 0; x < l.base.object_count(); ++x) {
        const std::uint32_t u = l.base.unit(x);
        const SparseMatrix id = SparseMatrix::identity(l.side.fibers[x].dim());
        if (l.src_lin[u] * l.unit_lin[x] != id || l.tgt_lin[u] * l.unit_lin[x] != id)
            return {false, "unit-section",
                    "object " + l.base.object_label(x) + ": src/tgt of the unit section is not the identity"};
    }

    // (b) inverse swaps source and target
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        const std::uint32_t gi = l.base.inv(g);
        if (l.src_lin[gi] * l.inv_lin[g] != l.tgt_lin[g] ||
            l.tgt_lin[gi] * l.inv_lin[g] != l.src_lin[g])
            return {false, "inverse-compat",
                    "arrow " + l.base.arrow_label(g) + ": inverse does not swap src and tgt"};
    }

    // (b) unit laws m̃(v, e(s̃v)) = v and m̃(e(t̃v), v) = v
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        const std::uint32_t us = l.base.unit(l.base.src(g));
        const std::uint32_t ut = l.base.unit(l.base.tgt(g));
        const SparseMatrix id = SparseMatrix::identity(l.top.fibers[g].dim());
        const SparseMatrix right =
            l.mult_lin.at({g, us}) * vstack(id, l.unit_lin[l.base.src(g)] * l.src_lin[g]);
        const SparseMatrix left =
            l.mult_lin.at({ut, g}) * vstack(l.unit_lin[l.base.tgt(g)] * l.tgt_lin[g], id);
        if (right != id || left != id)
            return {false, "unit-law", "arrow " + l.base.arrow_label(g)};
    }

    // (b) inverse laws m̃(v, ĩv) = e(t̃v) and m̃(ĩv, v) = e(s̃v)
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        const std::uint32_t gi = l.base.inv(g);
        const SparseMatrix id = SparseMatrix::identity(l.top.fibers[g].dim());
        if (l.mult_lin.at({g, gi}) * vstack(id, l.inv_lin[g]) !=
                l.unit_lin[l.base.tgt(g)] * l.tgt_lin[g] ||
            l.mult_lin.at({gi, g}) * vstack(l.inv_lin[g], id) !=
                l.unit_lin[l.base.src(g)] * l.src_lin[g])
            return {false, "inverse-law", "arrow " + l.base.arrow_label(g)};
    }

    // (b)/(c) per composable pair: compatibility and morphism on the fiber product
    for (const auto& [pair, m] : l.base.mult_table()) {
        const auto [g, h] = pair;
        const std::string where =
            "(" + l.base.arrow_label(g) + ", " + l.base.arrow_label(h) + ")";
        ComposableTuple t{2, 0, {g, h}};
        NerveFiber fiber{t, Subspace::zero_subspace(0), LieAlgebra(0)};
        try {
            fiber = build_fiber(l, t);
        } catch (const Error& e) {
            return {false, "fiber-product-closure", e.what()};
        }
        const SparseMatrix B = fiber.basis.as_columns();
        const SparseMatrix M = l.mult_lin.at(pair) * B;

        const std::size_t dg = l.top.fibers[g].dim();
        const std::size_t dh = l.top.fibers[h].dim();
        SparseMatrix pr1 = hstack(SparseMatrix::identity(dg), SparseMatrix(dg, dh));
        SparseMatrix pr2 = hstack(SparseMatrix(dh, dg), SparseMatrix::identity(dh));
        if (l.src_lin[m] * M != l.src_lin[h] * (pr2 * B) ||
            l.tgt_lin[m] * M != l.tgt_lin[g] * (pr1 * B))
            return {false, "mult-compat",
                    where + ": src/tgt of the product disagrees with the factors"};

        if (auto r = is_lie_morphism({fiber.algebra, l.top.fibers[m], M}); !r)
            return {false, "mult-morphism", where + ": " + morphism_witness(r)};
    }

    // (b) associativity on triple fiber products
    for (const auto& [pab, ab] : l.base.mult_table()) {
        const auto [a, b] = pab;
        for (std::uint32_t c = 0; c < l.base.arrow_count(); ++c) {
            if (!l.base.composable(b, c)) continue;
            const std::uint32_t bc = *l.base.mult(b, c);
            ComposableTuple t{3, 0, {a, b, c}};
            Subspace basis = kernel(constraint_matrix(l, t));
            const SparseMatrix B = basis.as_columns();
            const SparseMatrix lhs =
                l.mult_lin.at({ab, c}) *
                (block_diag(l.mult_lin.at({a, b}), SparseMatrix::identity(l.top.fibers[c].dim())) *
                 B);
            const SparseMatrix rhs =
                l.mult_lin.at({a, bc}) *
                (block_diag(SparseMatrix::identity(l.top.fibers[a].dim()), l.mult_lin.at({b, c})) *
                 B);
            if (lhs != rhs)
                return {false, "associativity",
                        "(" + l.base.arrow_label(a) + ", " + l.base.arrow_label(b) + ", " +
                            l.base.arrow_label(c) + ")"};
        }
    }

    return {true, "", ""};
}

bool vacancy_check(const LAGroupoid& l) {
    for (std::uint32_t g = 0; g < l.base.arrow_count(); ++g) {
        const std::size_t dim_o = l.top.fibers[g].dim();
        if (dim_o != l.side.fibers[l.base.src(g)].dim()) return false;
        if (rank(l.src_lin[g]) != dim_o) return false;
    }
    return true;
}

LANerve::LANerve(LAGroupoid l) : la_(std::move(l)) {}

void LANerve::ensure_level(std::uint32_t q) {
    while (levels_.size() <= q) {
        const std::uint32_t cur = static_cast<std::uint32_t>(levels_.size());
        NerveAlgebroid lvl{cur, {}};
        LiftedField lift{cur, {}};
        std::map<std::vector<std::uint32_t>, std::size_t> idx;
        const auto ts = nerve(la_.base, cur);
        lvl.fibers.reserve(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            lvl.fibers.push_back(build_fiber(la_, ts[i]));
            lift.fields.push_back(shifted_frame(lvl.fibers.back().algebra).differential);
            if (cur == 0)
                object_index_.emplace(ts[i].object, i);
            else
                idx.emplace(ts[i].arrows, i);
        }
        levels_.push_back(std::move(lvl));
        lifted_.push_back(std::move(lift));
        index_.push_back(std::move(idx));
    }
}

const NerveAlgebroid& LANerve::level(std::uint32_t q) {
    ensure_level(q);
    return levels_[q];
}

const LiftedField& LANerve::lifted(std::uint32_t q) {
    ensure_level(q);
    return lifted_[q];
}

std::size_t LANerve::tuple_index(std::uint32_t q, const ComposableTuple& t) {
    ensure_level(q);
    if (q == 0) return object_index_.at(t.object);
    return index_[q].at(t.arrows);
}

SparseMatrix LANerve::face_ambient(std::uint32_t q, std::uint32_t i, const ComposableTuple& t) {
    if (q == 1) return i == 0 ? la_.src_lin[t.arrows[0]] : la_.tgt_lin[t.arrows[0]];

    const ComposableTuple ft = face(la_.base, q, i, t);
    const auto src_off = component_offsets(la_, t);
    const auto dst_off = component_offsets(la_, ft);
    std::vector<SparseMatrix::Triplet> ts;

    const auto copy_block = [&](std::size_t dst_comp, const SparseMatrix& m, std::size_t src_comp) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row_entries(r))
                ts.push_back({dst_off[dst_comp] + r, src_off[src_comp] + c, v});
    };

    for (std::size_t j = 0; j < static_cast<std::size_t>(q) - 1; ++j) {
        if (i == 0) {
            copy_block(j, SparseMatrix::identity(la_.top.fibers[t.arrows[j + 1]].dim()), j + 1);
        } else if (i == q) {
            copy_block(j, SparseMatrix::identity(la_.top.fibers[t.arrows[j]].dim()), j);
        } else if (j + 1 < i) {
            copy_block(j, SparseMatrix::identity(la_.top.fibers[t.arrows[j]].dim()), j);
        } else if (j + 1 == i) {
            // multiplied slot: columns of mult_lin split over components i-1, i
            const SparseMatrix& m = la_.mult_lin.at({t.arrows[i - 1], t.arrows[i]});
            const std::size_t dg = la_.top.fibers[t.arrows[i - 1]].dim();
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (const auto& [c, v] : m.row_entries(r)) {
                    const std::size_t comp = c < dg ? i - 1 : i;
                    const std::size_t local = c < dg ? c : c - dg;
                    ts.push_back({dst_off[j] + r, src_off[comp] + local, v});
                }
        } else {
            copy_block(j, SparseMatrix::identity(la_.top.fibers[t.arrows[j + 1]].dim()), j + 1);
        }
    }
    return SparseMatrix(dst_off.back(), src_off.back(), ts);
}

void LANerve::ensure_faces(std::uint32_t q, std::uint32_t i) {
    const auto key = std::make_pair(q, i);
    if (face_.count(key)) return;
    ensure_level(q);
    ensure_level(q - 1);
    std::vector<SparseMatrix> mats;
    mats.reserve(levels_[q].fibers.size());
    for (std::size_t ti = 0; ti < levels_[q].fibers.size(); ++ti) {
        const NerveFiber& fiber = levels_[q].fibers[ti];
        const SparseMatrix amb = face_ambient(q, i, fiber.tuple);
        const NerveFiber& target = levels_[q - 1].fibers[face_tuple(q, i, ti)];
        std::vector<Vec> cols;
        cols.reserve(fiber.basis.dim());
        for (const auto& v : fiber.basis.basis()) {
            auto c = coordinates(target.basis, amb.apply(v));
            if (!c)
                throw MalformedInput("face image leaves the target fiber over " +
                                     to_string(la_.base, fiber.tuple));
            cols.push_back(std::move(*c));
        }
        mats.push_back(SparseMatrix::from_columns(target.basis.dim(), cols));
    }
    face_.emplace(key, std::move(mats));
}

std::size_t LANerve::face_tuple(std::uint32_t q, std::uint32_t i, std::size_t ti) {
    ensure_level(q);
    ensure_level(q - 1);
    const ComposableTuple ft = face(la_.base, q, i, levels_[q].fibers.at(ti).tuple);
    return tuple_index(q - 1, ft);
}

const SparseMatrix& LANerve::face_matrix(std::uint32_t q, std::uint32_t i, std::size_t ti) {
    if (q < 1) throw DegreeMismatch("faces need level >= 1");
    if (i > q) throw IndexOutOfRange("face index exceeds level");
    ensure_faces(q, i);
    return face_.at({q, i}).at(ti);
}

std::size_t LANerve::degeneracy_tuple(std::uint32_t q, std::uint32_t i, std::size_t ti) {
    ensure_level(q);
    ensure_level(q + 1);
    const ComposableTuple dt = degeneracy(la_.base, q, i, levels_[q].fibers.at(ti).tuple);
    return tuple_index(q + 1, dt);
}

SparseMatrix LANerve::degeneracy_matrix(std::uint32_t q, std::uint32_t i, std::size_t ti) {
    if (i > q) throw IndexOutOfRange("degeneracy index exceeds level");
    ensure_level(q);
    ensure_level(q + 1);
    const NerveFiber& source = levels_[q].fibers.at(ti);
    const NerveFiber& target = levels_[q + 1].fibers[degeneracy_tuple(q, i, ti)];
    const ComposableTuple& t = source.tuple;

    SparseMatrix amb(0, 0);
    if (q == 0) {
        amb = la_.unit_lin[t.object];
    } else {
        const auto src_off = component_offsets(la_, t);
        const ComposableTuple dt = degeneracy(la_.base, q, i, t);
        const auto dst_off = component_offsets(la_, dt);
        std::vector<SparseMatrix::Triplet> ts;
        const auto copy = [&](std::size_t dst_comp, const SparseMatrix& m, std::size_t src_comp) {
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (const auto& [c, v] : m.row_entries(r))
                    ts.push_back({dst_off[dst_comp] + r, src_off[src_comp] + c, v});
        };
        for (std::size_t j = 0; j < q; ++j)
            copy(j < i ? j : j + 1, SparseMatrix::identity(la_.top.fibers[t.arrows[j]].dim()), j);
        // inserted unit component
        if (i == 0)
            copy(0, la_.unit_lin[la_.base.tgt(t.arrows[0])] * la_.tgt_lin[t.arrows[0]], 0);
        else
            copy(i, la_.unit_lin[la_.base.src(t.arrows[i - 1])] * la_.src_lin[t.arrows[i - 1]],
                 i - 1);
        amb = SparseMatrix(dst_off.back(), src_off.back(), ts);
    }

    std::vector<Vec> cols;
    cols.reserve(source.basis.dim());
    for (const auto& v : source.basis.basis()) {
        auto c = coordinates(target.basis, amb.apply(v));
        if (!c)
            throw MalformedInput("degeneracy image leaves the target fiber over " +
                                 to_string(la_.base, t));
        cols.push_back(std::move(*c));
    }
    return SparseMatrix::from_columns(target.basis.dim(), cols);
}

NerveAlgebroid nerve_algebroid(const LAGroupoid& l, std::uint32_t q) {
    LANerve n(l);
    return n.level(q);
}

LiftedField lifted_differential(const LAGroupoid& l, std::uint32_t q) {
    LANerve n(l);
    return n.lifted(q);
}

std::vector<SparseMatrix> nerve_face_linear(const LAGroupoid& l, std::uint32_t q, std::uint32_t i) {
    LANerve n(l);
    std::vector<SparseMatrix> out;
    const std::size_t count = n.level(q).fibers.size();
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) out.push_back(n.face_matrix(q, i, t));
    return out;
}

std::vector<SparseMatrix> nerve_degeneracy_linear(const LAGroupoid& l, std::uint32_t q,
                                                  std::uint32_t i) {
    LANerve n(l);
    std::vector<SparseMatrix> out;
    const std::size_t count = n.level(q).fibers.size();
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) out.push_back(n.degeneracy_matrix(q, i, t));
    return out;
}

RelatednessCheckResult check_face_relatedness(LANerve& nerve, std::uint32_t q, std::uint32_t i) {
    const NerveAlgebroid& lvl = nerve.level(q);
    for (std::size_t t = 0; t < lvl.fibers.size(); ++t) {
        const SparseMatrix& L = nerve.face_matrix(q, i, t);
        const std::size_t ft = nerve.face_tuple(q, i, t);
        const DerivationSpec& d_source = nerve.lifted(q).fields[t];
        const DerivationSpec& d_target = nerve.lifted(q - 1).fields[ft];
        if (auto r = is_related(L, d_source, d_target); !r)
            return {false,
                    "sigma_" + std::to_string(i) + " at level " + std::to_string(q) + " on " +
                        to_string(nerve.data().base, lvl.fibers[t].tuple) + ", generator " +
                        std::to_string(*r.generator + 1),
                    to_string(*r.residue)};
    }
    return {true, "", ""};
}

RelatednessCheckResult check_multiplicative(const LAGroupoid& l) {
    LANerve nerve(l);
    for (std::uint32_t i = 0; i <= 1; ++i)
        if (auto r = check_face_relatedness(nerve, 1, i); !r) return r;
    for (std::uint32_t i = 0; i <= 2; ++i)
        if (auto r = check_face_relatedness(nerve, 2, i); !r) return r;
    return {true, "", ""};
}

}  // namespace laq
