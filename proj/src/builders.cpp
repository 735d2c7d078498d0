#include "laq/builders.hpp"

#include <algorithm>
#include <utility>

#include "laq/errors.hpp"

namespace laq {
namespace {

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Rational>> entries;
    for (const auto& [ij, coeffs] : a.table())
        for (std::uint32_t k = 0; k < a.dim(); ++k)
            if (coeffs[k] != 0) entries.emplace_back(ij.first, ij.second, k, coeffs[k]);
    for (const auto& [ij, coeffs] : b.table())
        for (std::uint32_t k = 0; k < b.dim(); ++k)
            if (coeffs[k] != 0)
                entries.emplace_back(a.dim() + ij.first, a.dim() + ij.second, a.dim() + k,
                                     coeffs[k]);
    return LieAlgebra(a.dim() + b.dim(), entries);
}

// the vacant shape shared by equivariant and vacant_matched_pair: Ω_g is the
// source fiber, s̃ = id, t̃ = the lift, m̃ the second projection
LAGroupoid action_square(const LieFiberBundle& a, const GroupActionOnBundle& action) {
    const FiniteGroupoid& g = action.group;
    LAGroupoid l{g};
    l.side = a;

    l.top.base.reserve(g.arrow_count());
    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
        l.top.base.push_back(g.arrow_label(i));
        l.top.fibers.push_back(a.fibers[g.src(i)]);
    }

    const auto fiber_dim = [&](std::uint32_t x) { return a.fibers[x].dim(); };
    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
        l.src_lin.push_back(SparseMatrix::identity(fiber_dim(g.src(i))));
        l.tgt_lin.push_back(action.lifts[i].matrix);
        l.inv_lin.push_back(action.lifts[i].matrix);
    }
    for (std::uint32_t x = 0; x < g.object_count(); ++x)
        l.unit_lin.push_back(SparseMatrix::identity(fiber_dim(x)));

    for (const auto& [pair, prod] : g.mult_table()) {
        const std::size_t ng = fiber_dim(g.src(pair.first));
        const std::size_t nh = fiber_dim(g.src(pair.second));
        std::vector<SparseMatrix::Triplet> ts;
        for (std::size_t i = 0; i < nh; ++i) ts.push_back({i, ng + i, Rational(1)});
        l.mult_lin.emplace(pair, SparseMatrix(nh, ng + nh, ts));
        (void)prod;
    }
    return l;
}

std::string pair_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

}  // namespace

LACheckResult validate_action(const GroupActionOnBundle& action, const LieFiberBundle& a) {
    const FiniteGroupoid& g = action.group;
    if (auto r = validate_groupoid(g); !r)
        return {false, "action-base", r.axiom + ": " + r.witness};

    if (g.object_count() != a.base.size())
        return {false, "action-base", "acting groupoid objects do not match the bundle points"};
    for (std::uint32_t x = 0; x < g.object_count(); ++x)
        if (g.object_label(x) != a.base[x])
            return {false, "action-base",
                    "object " + g.object_label(x) + " is not a bundle point"};

    if (action.lifts.size() != g.arrow_count())
        return {false, "action-shape", "one lift per arrow is required"};
    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
        const LinearLieMorphism& f = action.lifts[i];
        if (f.source != a.fibers[g.src(i)] || f.target != a.fibers[g.tgt(i)] ||
            f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
            return {false, "action-shape",
                    "lift of " + g.arrow_label(i) + " does not map the source fiber to the target fiber"};
    }

    for (std::uint32_t x = 0; x < g.object_count(); ++x)
        if (action.lifts[g.unit(x)].matrix != SparseMatrix::identity(a.fibers[x].dim()))
            return {false, "action-unit", "lift of the unit at " + g.object_label(x) + " is not the identity"};

    for (const auto& [pair, prod] : g.mult_table())
        if (action.lifts[prod].matrix !=
            action.lifts[pair.first].matrix * action.lifts[pair.second].matrix)
            return {false, "action-functorial",
                    "lift of " + g.arrow_label(pair.first) + "∘" + g.arrow_label(pair.second) +
                        " is not the composite of the lifts"};

    for (std::uint32_t i = 0; i < g.arrow_count(); ++i)
        if (auto r = is_lie_morphism(action.lifts[i]); !r)
            return {false, "action-morphism",
                    "lift of " + g.arrow_label(i) + " breaks the bracket on basis pair (" +
                        std::to_string(r.pair->first + 1) + ", " + std::to_string(r.pair->second + 1) +
                        ")"};

    return {true, "", ""};
}

LAGroupoid trivial_groupoid(const FiniteGroupoid& g) {
    LAGroupoid l{g};
    for (std::uint32_t x = 0; x < g.object_count(); ++x) {
        l.side.base.push_back(g.object_label(x));
        l.side.fibers.emplace_back(0);
        l.unit_lin.emplace_back(0, 0);
    }
    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
        l.top.base.push_back(g.arrow_label(i));
        l.top.fibers.emplace_back(0);
        l.src_lin.emplace_back(0, 0);
        l.tgt_lin.emplace_back(0, 0);
        l.inv_lin.emplace_back(0, 0);
    }
    for (const auto& [pair, prod] : g.mult_table()) {
        l.mult_lin.emplace(pair, SparseMatrix(0, 0));
        (void)prod;
    }
    return l;
}

LAGroupoid trivial_algebroid(const LieFiberBundle& a) {
    GroupActionOnBundle action{identity_groupoid(a.base), {}};
    for (std::uint32_t i = 0; i < action.group.arrow_count(); ++i) {
        const LieAlgebra& fiber = a.fibers[action.group.src(i)];
        action.lifts.push_back({fiber, fiber, SparseMatrix::identity(fiber.dim())});
    }
    return action_square(a, action);
}

LAGroupoid equivariant(const LieFiberBundle& a, const GroupActionOnBundle& action) {
    if (auto r = validate_action(action, a); !r)
        throw ActionInvalid(r.check + ": " + r.witness);
    return action_square(a, action);
}

LAGroupoid vacant_matched_pair(const FiniteGroupoid& g, const LieFiberBundle& a,
                               const GroupActionOnBundle& action) {
    if (!(action.group == g))
        throw ActionInvalid("the supplied action does not act through the given groupoid");
    return equivariant(a, action);
}

LAGroupoid pair_zero(const std::vector<std::string>& points) {
    if (points.empty()) throw EmptySet("a pair groupoid needs at least one point");
    return trivial_groupoid(pair_groupoid(points));
}

LAGroupoid product(const LAGroupoid& l1, const LAGroupoid& l2) {
    const FiniteGroupoid& g1 = l1.base;
    const FiniteGroupoid& g2 = l2.base;

    std::vector<std::string> objects;
    for (std::uint32_t x = 0; x < g1.object_count(); ++x)
        for (std::uint32_t y = 0; y < g2.object_count(); ++y)
            objects.push_back(pair_label(g1.object_label(x), g2.object_label(y)));

    std::vector<FiniteGroupoid::ArrowSpec> arrows;
    for (std::uint32_t i = 0; i < g1.arrow_count(); ++i)
        for (std::uint32_t j = 0; j < g2.arrow_count(); ++j)
            arrows.push_back({pair_label(g1.arrow_label(i), g2.arrow_label(j)),
                              pair_label(g1.object_label(g1.src(i)), g2.object_label(g2.src(j))),
                              pair_label(g1.object_label(g1.tgt(i)), g2.object_label(g2.tgt(j)))});

    const auto alabel = [&](std::uint32_t i, std::uint32_t j) {
        return pair_label(g1.arrow_label(i), g2.arrow_label(j));
    };

    std::vector<std::array<std::string, 3>> mult;
    for (const auto& [p1, k1] : g1.mult_table())
        for (const auto& [p2, k2] : g2.mult_table())
            mult.push_back({alabel(p1.first, p2.first), alabel(p1.second, p2.second),
                            alabel(k1, k2)});

    std::vector<std::pair<std::string, std::string>> units;
    for (std::uint32_t x = 0; x < g1.object_count(); ++x)
        for (std::uint32_t y = 0; y < g2.object_count(); ++y)
            units.emplace_back(pair_label(g1.object_label(x), g2.object_label(y)),
                               alabel(g1.unit(x), g2.unit(y)));

    std::vector<std::pair<std::string, std::string>> inverses;
    for (std::uint32_t i = 0; i < g1.arrow_count(); ++i)
        for (std::uint32_t j = 0; j < g2.arrow_count(); ++j)
            inverses.emplace_back(alabel(i, j), alabel(g1.inv(i), g2.inv(j)));

    LAGroupoid l{FiniteGroupoid(objects, arrows, mult, units, inverses)};

    // labels were sorted by the constructor; rebuild the component indices
    // behind each composite label to align all per-object/per-arrow tables
    std::vector<std::pair<std::uint32_t, std::uint32_t>> object_parts(l.base.object_count());
    for (std::uint32_t x = 0; x < g1.object_count(); ++x)
        for (std::uint32_t y = 0; y < g2.object_count(); ++y)
            object_parts[*l.base.object_index(pair_label(g1.object_label(x), g2.object_label(y)))] = {
                x, y};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arrow_parts(l.base.arrow_count());
    for (std::uint32_t i = 0; i < g1.arrow_count(); ++i)
        for (std::uint32_t j = 0; j < g2.arrow_count(); ++j)
            arrow_parts[*l.base.arrow_index(alabel(i, j))] = {i, j};

    for (std::uint32_t x = 0; x < l.base.object_count(); ++x) {
        const auto [a, b] = object_parts[x];
        l.side.base.push_back(l.base.object_label(x));
        l.side.fibers.push_back(direct_sum(l1.side.fibers[a], l2.side.fibers[b]));
        l.unit_lin.push_back(block_diag(l1.unit_lin[a], l2.unit_lin[b]));
    }
    for (std::uint32_t i = 0; i < l.base.arrow_count(); ++i) {
        const auto [a, b] = arrow_parts[i];
        l.top.base.push_back(l.base.arrow_label(i));
        l.top.fibers.push_back(direct_sum(l1.top.fibers[a], l2.top.fibers[b]));
        l.src_lin.push_back(block_diag(l1.src_lin[a], l2.src_lin[b]));
        l.tgt_lin.push_back(block_diag(l1.tgt_lin[a], l2.tgt_lin[b]));
        l.inv_lin.push_back(block_diag(l1.inv_lin[a], l2.inv_lin[b]));
    }

    for (const auto& [pair, prod] : l.base.mult_table()) {
        const auto [ga, gb] = arrow_parts[pair.first];
        const auto [ha, hb] = arrow_parts[pair.second];
        const SparseMatrix& m1 = l1.mult_lin.at({ga, ha});
        const SparseMatrix& m2 = l2.mult_lin.at({gb, hb});
        const std::size_t ng1 = l1.top.fibers[ga].dim();
        const std::size_t ng2 = l2.top.fibers[gb].dim();
        const std::size_t nh1 = l1.top.fibers[ha].dim();

        // interleave: composite fibers are Ω_g1 ⊕ Ω_g2 and Ω_h1 ⊕ Ω_h2
        std::vector<SparseMatrix::Triplet> ts;
        for (std::size_t r = 0; r < m1.rows(); ++r)
            for (const auto& [c, v] : m1.row_entries(r))
                ts.push_back({r, c < ng1 ? c : ng2 + c, v});
        for (std::size_t r = 0; r < m2.rows(); ++r)
            for (const auto& [c, v] : m2.row_entries(r))
                ts.push_back({m1.rows() + r, c < ng2 ? ng1 + c : ng1 + nh1 + c, v});
        l.mult_lin.emplace(pair,
                           SparseMatrix(m1.rows() + m2.rows(), m1.cols() + m2.cols(), ts));
        (void)prod;
    }
    return l;
}

ComplexAction complex_action(LANerve& nerve, const DoubleComplex& c,
                             const std::vector<std::string>& generator_arrows) {
    const LAGroupoid& l = nerve.data();
    const FiniteGroupoid& g = l.base;
    ComplexAction out;

    for (const auto& label : generator_arrows) {
        const auto idx = g.arrow_index(label);
        if (!idx) throw ActionNotCompatible("unknown generator arrow " + label);
        const std::uint32_t a = *idx;

        std::vector<std::vector<SparseMatrix>> grid(
            c.p_max + 1, std::vector<SparseMatrix>(c.q_max + 1));

        const bool is_unit = g.src(a) == g.tgt(a) && g.unit(g.src(a)) == a;
        if (is_unit) {
            for (std::size_t p = 0; p <= c.p_max; ++p)
                for (std::size_t q = 0; q <= c.q_max; ++q)
                    grid[p][q] = SparseMatrix::identity(c.block(p, q).dim);
            out.action.push_back(std::move(grid));
            continue;
        }

        if (g.object_count() != 1)
            throw ActionNotCompatible("generator " + label + " is not a unit arrow and the base has several objects");
        for (std::uint32_t i = 0; i < g.arrow_count(); ++i)
            if (l.src_lin[i] != SparseMatrix::identity(l.top.fibers[i].dim()))
                throw ActionNotCompatible("complex actions need identity source maps (equivariant/vacant shape)");

        const SparseMatrix& transport = l.tgt_lin[g.inv(a)];
        const auto conj = [&](std::uint32_t arrow) {
            return g.mult_or_throw(g.mult_or_throw(g.inv(a), arrow), a);
        };

        // per generator and level: conjugated tuple index and the fiber map
        // in the nerve bases; blocks then get its exterior pullbacks
        for (std::size_t q = 0; q <= c.q_max; ++q) {
            const NerveAlgebroid& lvl = nerve.level(static_cast<std::uint32_t>(q));
            std::vector<std::vector<SparseMatrix::Triplet>> acc(c.p_max + 1);
            for (std::size_t ti = 0; ti < lvl.fibers.size(); ++ti) {
                const NerveFiber& fiber = lvl.fibers[ti];
                ComposableTuple conj_tuple = fiber.tuple;
                for (auto& arrow : conj_tuple.arrows) arrow = conj(arrow);
                const std::size_t tj =
                    nerve.tuple_index(static_cast<std::uint32_t>(q), conj_tuple);
                const NerveFiber& target = nerve.level(static_cast<std::uint32_t>(q)).fibers[tj];

                // level 0 lives in one fiber, level q in a q-fold direct sum
                SparseMatrix ambient = transport;
                for (std::size_t comp = 1; comp < q; ++comp)
                    ambient = block_diag(ambient, transport);

                std::vector<Vec> cols;
                for (const auto& v : fiber.basis.basis()) {
                    auto coord = coordinates(target.basis, ambient.apply(v));
                    if (!coord)
                        throw ActionNotCompatible("generator " + label +
                                                  " does not preserve the nerve fibers");
                    cols.push_back(std::move(*coord));
                }
                const SparseMatrix local = SparseMatrix::from_columns(target.basis.dim(), cols);

                for (std::size_t p = 0; p <= c.p_max; ++p) {
                    const SparseMatrix pb = exterior_pullback(static_cast<std::uint32_t>(p), local);
                    const std::size_t r0 = c.block(p, q).tuple_offset[ti];
                    const std::size_t c0 = c.block(p, q).tuple_offset[tj];
                    for (std::size_t r = 0; r < pb.rows(); ++r)
                        for (const auto& [col, v] : pb.row_entries(r))
                            acc[p].push_back({r0 + r, c0 + col, v});
                }
            }
            for (std::size_t p = 0; p <= c.p_max; ++p)
                grid[p][q] = SparseMatrix(c.block(p, q).dim, c.block(p, q).dim, acc[p]);
        }
        out.action.push_back(std::move(grid));
    }
    return out;
}

}  // namespace laq
