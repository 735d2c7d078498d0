#include <doctest.h>

#include "laq/builders.hpp"
#include "laq/errors.hpp"
#include "laq/la_groupoid.hpp"
#include "support.hpp"

using namespace laq;
using namespace laq::testing;

namespace {

LAGroupoid vacant_sl2_flip() {
    LieFiberBundle a = over_point(sl2());
    return vacant_matched_pair(cyclic(2), a, flip_action(a.fibers[0], sl2_flip()));
}

}  // namespace

TEST_CASE("shape and structure validation") {
    LAGroupoid good = trivial_algebroid(over_point(sl2()));
    check_la_shape(good);
    CHECK(validate_la(good).ok);
    CHECK(check_multiplicative(good).ok);

    SUBCASE("misaligned tables are malformed") {
        LAGroupoid bad = good;
        bad.src_lin.clear();
        CHECK_THROWS_AS(check_la_shape(bad), MalformedInput);
        LAGroupoid wrong_dim = good;
        wrong_dim.unit_lin[0] = SparseMatrix(2, 3);
        CHECK_THROWS_AS(check_la_shape(wrong_dim), MalformedInput);
    }
    SUBCASE("side jacobi failures are caught before structure checks") {
        LieFiberBundle broken{{"pt"}, {LieAlgebra(3, {{0, 1, 0, 1}, {1, 2, 1, 1}})}};
        LAGroupoid bad = trivial_algebroid(broken);
        auto r = validate_la(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.check == "side-jacobi");
        CHECK_FALSE(r.witness.empty());
    }
    SUBCASE("non-morphism target map") {
        LAGroupoid bad = vacant_sl2_flip();
        std::uint32_t a1 = *bad.base.arrow_index("a1");
        bad.tgt_lin[a1] = SparseMatrix::identity(3) + SparseMatrix(3, 3, {{0, 1, 1}});
        auto r = validate_la(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.check == "tgt-morphism");
    }
    SUBCASE("broken unit law") {
        LAGroupoid bad = trivial_algebroid(over_point(sl2()));
        bad.unit_lin[0] = SparseMatrix(3, 3);
        auto r = validate_la(bad);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.check.empty());
    }
}

TEST_CASE("vacancy detects isomorphic source maps") {
    CHECK(vacancy_check(trivial_algebroid(over_point(sl2()))));
    CHECK(vacancy_check(vacant_sl2_flip()));
    CHECK(vacancy_check(trivial_groupoid(cyclic(3))));  // zero fibers, trivially iso

    // one-object square with A = 0 and a one-dimensional top fiber: the
    // source map 0 x 1 cannot be injective
    FiniteGroupoid pt = identity_groupoid({"pt"});
    LAGroupoid l{pt};
    l.side = LieFiberBundle{{"pt"}, {LieAlgebra(0)}};
    l.top = LieFiberBundle{{"pt"}, {LieAlgebra(1)}};
    l.src_lin = {SparseMatrix(0, 1)};
    l.tgt_lin = {SparseMatrix(0, 1)};
    l.unit_lin = {SparseMatrix(1, 0)};
    l.inv_lin = {SparseMatrix(1, 1, {{0, 0, -1}})};
    l.mult_lin[{0, 0}] = hstack(SparseMatrix::identity(1), SparseMatrix::identity(1));
    check_la_shape(l);
    CHECK_FALSE(vacancy_check(l));
}

TEST_CASE("nerve fibers carry the compatibility subspace") {
    LAGroupoid l = vacant_sl2_flip();
    LANerve nerve(l);

    const NerveAlgebroid& level0 = nerve.level(0);
    REQUIRE(level0.fibers.size() == 1);
    CHECK(level0.fibers[0].algebra == sl2());

    const NerveAlgebroid& level2 = nerve.level(2);
    REQUIRE(level2.fibers.size() == 4);
    for (const NerveFiber& f : level2.fibers) {
        CHECK(f.basis.ambient_dim() == 6);
        CHECK(f.basis.dim() == 3);
        // in the canonical fiber coordinates the bracket is the sl2 table
        CHECK(f.algebra == sl2());
    }

    // source compatibility: s(v_1) = t(v_2) on every basis vector
    for (const NerveFiber& f : level2.fibers) {
        for (const Vec& v : f.basis.basis()) {
            Vec v1(v.begin(), v.begin() + 3), v2(v.begin() + 3, v.end());
            Vec sv = l.src_lin[f.tuple.arrows[0]].apply(v1);
            Vec tv = l.tgt_lin[f.tuple.arrows[1]].apply(v2);
            CHECK(sv == tv);
        }
    }

    // zero-fiber squares have zero-dimensional nerve fibers at every level
    LAGroupoid z = trivial_groupoid(pair_groupoid({"u", "v"}));
    NerveAlgebroid n3 = nerve_algebroid(z, 3);
    CHECK(n3.fibers.size() == 16);
    for (const NerveFiber& f : n3.fibers) CHECK(f.basis.dim() == 0);
}

TEST_CASE("face matrices are related to the lifted fields at all levels") {
    LAGroupoid l = vacant_sl2_flip();
    LANerve nerve(l);
    for (std::uint32_t q = 1; q <= 3; ++q)
        for (std::uint32_t i = 0; i <= q; ++i)
            CHECK(check_face_relatedness(nerve, q, i).ok);

    LAGroupoid e = equivariant(over_point(heisenberg()),
                               flip_action(heisenberg(), heis_flip()));
    LANerve en(e);
    for (std::uint32_t q = 1; q <= 3; ++q)
        for (std::uint32_t i = 0; i <= q; ++i)
            CHECK(check_face_relatedness(en, q, i).ok);
}

TEST_CASE("multiplicativity check catches corrupted structure maps") {
    LieFiberBundle a = over_point(sl2());
    LAGroupoid good = equivariant(a, flip_action(a.fibers[0], sl2_flip()));
    REQUIRE(check_multiplicative(good).ok);
    std::uint32_t a1 = *good.base.arrow_index("a1");

    SUBCASE("sheared target map") {
        LAGroupoid bad = good;
        bad.tgt_lin[a1] = SparseMatrix::identity(3) + SparseMatrix(3, 3, {{0, 1, 1}});
        auto r = check_multiplicative(bad);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.context.empty());
        CHECK_FALSE(r.residue.empty());
    }
    SUBCASE("rescaled multiplication") {
        LAGroupoid bad = good;
        bad.mult_lin[{a1, a1}] = SparseMatrix(3, 6, {{0, 3, 2}, {1, 4, 2}, {2, 5, 2}});
        CHECK_FALSE(check_multiplicative(bad).ok);
    }
    SUBCASE("corrupted top bracket") {
        LAGroupoid bad = good;
        bad.top.fibers[a1] =
            LieAlgebra(3, {{0, 1, 2, 1}, {0, 1, 0, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}});
        CHECK_FALSE(check_multiplicative(bad).ok);
    }
}

TEST_CASE("lifted differential restricts the fiberwise one") {
    LAGroupoid l = trivial_algebroid(over_point(sl2()));
    LiftedField f0 = lifted_differential(l, 0);
    ShiftedAlgebra s = shifted_frame(sl2());
    REQUIRE(f0.fields.size() == 1);
    CHECK(f0.fields[0].images == s.differential.images);

    // every level of the identity-groupoid square carries the same algebra
    LiftedField f2 = lifted_differential(l, 2);
    REQUIRE(f2.fields.size() == 1);
    CHECK(f2.fields[0].images == s.differential.images);

    // levels of a square with zero fibers carry the zero derivation
    LAGroupoid z = trivial_groupoid(cyclic(2));
    LiftedField zf = lifted_differential(z, 2);
    CHECK(zf.fields.size() == 4);
    for (const DerivationSpec& d : zf.fields) CHECK(d.images.empty());
}

TEST_CASE("degeneracy matrices satisfy the unit insertion laws") {
    LAGroupoid l = vacant_sl2_flip();
    LANerve nerve(l);
    for (std::uint32_t q = 0; q <= 2; ++q) {
        const NerveAlgebroid& level = nerve.level(q);
        for (std::size_t ti = 0; ti < level.fibers.size(); ++ti)
            for (std::uint32_t i = 0; i <= q; ++i) {
                std::size_t up = nerve.degeneracy_tuple(q, i, ti);
                SparseMatrix ins = nerve.degeneracy_matrix(q, i, ti);
                // both adjacent faces undo the insertion
                CHECK(nerve.face_tuple(q + 1, i, up) == ti);
                CHECK(nerve.face_tuple(q + 1, i + 1, up) == ti);
                CHECK(nerve.face_matrix(q + 1, i, up) * ins ==
                      SparseMatrix::identity(ins.cols()));
                CHECK(nerve.face_matrix(q + 1, i + 1, up) * ins ==
                      SparseMatrix::identity(ins.cols()));
            }
    }
}
