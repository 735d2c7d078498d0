#include <doctest.h>

#include "laq/builders.hpp"
#include "laq/double_complex.hpp"
#include "laq/errors.hpp"
#include "laq/reference.hpp"
#include "support.hpp"

using namespace laq;
using namespace laq::testing;

TEST_CASE("trivial groupoid squares carry zero fibers") {
    LAGroupoid l = trivial_groupoid(pair_groupoid({"u", "v"}));
    CHECK(validate_la(l).ok);
    CHECK(check_multiplicative(l).ok);
    for (const LieAlgebra& f : l.side.fibers) CHECK(f.dim() == 0);
    for (const LieAlgebra& f : l.top.fibers) CHECK(f.dim() == 0);
    CHECK(l.base == pair_groupoid({"u", "v"}));
}

TEST_CASE("identity groupoid squares restrict to the bundle") {
    LieFiberBundle a{{"p", "q"}, {sl2(), LieAlgebra(2)}};
    LAGroupoid l = trivial_algebroid(a);
    CHECK(validate_la(l).ok);
    CHECK(l.side == a);
    CHECK(l.top.fibers[0].dim() == 3);
    for (const SparseMatrix& m : l.src_lin) CHECK(m == SparseMatrix::identity(m.rows()));
    for (const SparseMatrix& m : l.tgt_lin) CHECK(m == SparseMatrix::identity(m.rows()));
    // its cohomology is the direct sum over the points
    DoubleComplex c = assemble(l, 4, 4);
    std::vector<std::size_t> expect(4, 0);
    for (std::size_t n = 0; n <= 3; ++n)
        expect[n] = reference::ce_dims_brute(sl2(), 3)[n] +
                    reference::ce_dims_brute(LieAlgebra(2), 3)[n];
    CHECK(total_cohomology(c, 3).dims == expect);
}

TEST_CASE("equivariant with the trivial group is the identity square") {
    LieFiberBundle a = over_point(sl2());
    GroupActionOnBundle trivial{identity_groupoid(a.base),
                                {LinearLieMorphism{sl2(), sl2(), SparseMatrix::identity(3)}}};
    CHECK(equivariant(a, trivial) == trivial_algebroid(a));
}

TEST_CASE("equivariant squares validate and reject bad actions") {
    LieFiberBundle a = over_point(sl2());
    LAGroupoid l = equivariant(a, flip_action(sl2(), sl2_flip()));
    CHECK(validate_la(l).ok);
    CHECK(check_multiplicative(l).ok);
    CHECK(vacancy_check(l));
    // the top fiber over g is the side fiber at its source
    for (std::size_t g = 0; g < l.base.arrow_count(); ++g) {
        CHECK(l.top.fibers[g] == sl2());
        CHECK(l.src_lin[g] == SparseMatrix::identity(3));
    }
    std::uint32_t a1 = *l.base.arrow_index("a1");
    CHECK(l.tgt_lin[a1] == sl2_flip());

    SUBCASE("non-morphism lift") {
        // diag(1, 1, -1) is an involution but negates [e, f] = h only on one side
        GroupActionOnBundle bad = flip_action(
            sl2(), SparseMatrix(3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}}));
        auto r = validate_action(bad, a);
        CHECK_FALSE(r.ok);
        CHECK(r.check == "action-morphism");
        CHECK_THROWS_AS(equivariant(a, bad), ActionInvalid);
    }
    SUBCASE("non-functorial lifts") {
        // a shear is an automorphism of an abelian fiber but does not square
        // to the identity, so lift(a1 . a1) != lift(a1)^2
        LieFiberBundle ab = over_point(LieAlgebra(2));
        GroupActionOnBundle bad =
            flip_action(ab.fibers[0], SparseMatrix(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
        auto r = validate_action(bad, ab);
        CHECK_FALSE(r.ok);
        CHECK(r.check == "action-functorial");
        CHECK_THROWS_AS(equivariant(ab, bad), ActionInvalid);
    }
    SUBCASE("unit lift must be the identity") {
        GroupActionOnBundle bad = flip_action(sl2(), sl2_flip());
        bad.lifts[*bad.group.arrow_index("1")].matrix = sl2_flip();
        CHECK_FALSE(validate_action(bad, a).ok);
        CHECK_THROWS_AS(equivariant(a, bad), ActionInvalid);
    }
    SUBCASE("objects must match the bundle base") {
        LieFiberBundle two{{"p", "q"}, {sl2(), sl2()}};
        GroupActionOnBundle action = flip_action(sl2(), sl2_flip());
        CHECK_THROWS_AS(equivariant(two, action), ActionInvalid);
    }
}

TEST_CASE("matched pair squares require the acting groupoid itself") {
    LieFiberBundle a = over_point(sl2());
    GroupActionOnBundle action = flip_action(sl2(), sl2_flip());
    LAGroupoid l = vacant_matched_pair(cyclic(2), a, action);
    CHECK(validate_la(l).ok);
    CHECK(vacancy_check(l));
    CHECK(l == equivariant(a, action));
    CHECK_THROWS_AS(vacant_matched_pair(cyclic(3), a, action), ActionInvalid);
}

TEST_CASE("pair squares and empty inputs") {
    LAGroupoid l = pair_zero({"u", "v", "w"});
    CHECK(validate_la(l).ok);
    CHECK(l.base.arrow_count() == 9);
    for (const LieAlgebra& f : l.top.fibers) CHECK(f.dim() == 0);
    CHECK_THROWS_AS(pair_zero({}), EmptySet);

    // contractible: all cohomology in degree zero
    DoubleComplex c = assemble(pair_zero({"u", "v"}), 4, 4);
    CHECK(total_cohomology(c, 3).dims == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("products multiply labels and add fibers") {
    LAGroupoid left = trivial_algebroid(over_point(LieAlgebra(2)));
    LAGroupoid right = pair_zero({"u", "v"});
    LAGroupoid prod = product(left, right);
    CHECK(validate_la(prod).ok);
    CHECK(check_multiplicative(prod).ok);
    CHECK(prod.base.object_count() == 2);
    CHECK(prod.base.arrow_count() == 4);
    for (const LieAlgebra& f : prod.side.fibers) CHECK(f.dim() == 2);

    SUBCASE("cohomology matches the one-factor answer for a contractible factor") {
        DoubleComplex c = assemble(prod, 4, 4);
        CHECK(total_cohomology(c, 3).dims == reference::ce_dims_brute(LieAlgebra(2), 3));
    }
    SUBCASE("degree zero is multiplicative") {
        LAGroupoid g2 = trivial_groupoid(cyclic(2));
        LAGroupoid g3 = trivial_groupoid(cyclic(3));
        DoubleComplex c = assemble(product(g2, g3), 3, 3);
        CohomologyTable t = total_cohomology(c, 2);
        CHECK(t.dims[0] == 1);
        // H of a product of groups in characteristic zero stays trivial
        CHECK(t.dims == std::vector<std::size_t>{1, 0, 0});
    }
    SUBCASE("product with a point changes nothing") {
        LAGroupoid pt = pair_zero({"x"});
        LAGroupoid same = product(left, pt);
        DoubleComplex c1 = assemble(left, 4, 4);
        DoubleComplex c2 = assemble(same, 4, 4);
        for (std::size_t p = 0; p <= 4; ++p)
            for (std::size_t q = 0; q <= 4; ++q)
                CHECK(c1.block(p, q).dim == c2.block(p, q).dim);
        CHECK(total_cohomology(c1, 3).dims == total_cohomology(c2, 3).dims);
    }
}

TEST_CASE("complex actions transport blocks by the inverse lift") {
    LieFiberBundle a = over_point(sl2());
    LAGroupoid l = vacant_matched_pair(cyclic(2), a, flip_action(sl2(), sl2_flip()));
    LANerve nerve(l);
    DoubleComplex c = assemble(nerve, 3, 3);

    SUBCASE("unit generators act as the identity") {
        ComplexAction id_action = complex_action(nerve, c, {"1"});
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; q <= 3; ++q)
                CHECK(id_action.action[0][p][q] == SparseMatrix::identity(c.block(p, q).dim));
    }
    SUBCASE("order-two generators act by involutions commuting with D") {
        ComplexAction act = complex_action(nerve, c, {"a1"});
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; q <= 3; ++q) {
                const SparseMatrix& m = act.action[0][p][q];
                CHECK(m * m == SparseMatrix::identity(c.block(p, q).dim));
                if (q < 3) CHECK(act.action[0][p][q + 1] * c.delta[p][q + 1] ==
                                 c.delta[p][q + 1] * m);
                if (p < 3) CHECK(act.action[0][p + 1][q] * c.psi[p][q] ==
                                 c.psi[p][q] * m);
            }
    }
    SUBCASE("unknown generator labels are rejected") {
        CHECK_THROWS_AS(complex_action(nerve, c, {"zz"}), ActionNotCompatible);
    }
    SUBCASE("non-unit generators on multi-object bases are rejected") {
        LAGroupoid pairs = pair_zero({"u", "v"});
        LANerve pn(pairs);
        DoubleComplex pc = assemble(pn, 2, 2);
        CHECK_THROWS_AS(complex_action(pn, pc, {"u->v"}), ActionNotCompatible);
    }
}
