#include <doctest.h>

#include "laq/builders.hpp"
#include "laq/double_complex.hpp"
#include "laq/errors.hpp"
#include "laq/reference.hpp"
#include "support.hpp"

using namespace laq;
using namespace laq::testing;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

TEST_CASE("assembled blocks have binomial dimensions over the tuples") {
    LAGroupoid l = equivariant(over_point(sl2()), flip_action(sl2(), sl2_flip()));
    DoubleComplex c = assemble(l, 3, 3);
    CHECK(c.p_max == 3);
    CHECK(c.q_max == 3);
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q) {
            std::size_t tuples = q == 0 ? 1 : (std::size_t(1) << q);
            CHECK(c.block(p, q).dim == tuples * choose(3, p));
            CHECK(c.block(p, q).labels.size() == c.block(p, q).dim);
            CHECK(c.block(p, q).tuple_offset.front() == 0);
            CHECK(c.block(p, q).tuple_offset.back() == c.block(p, q).dim);
        }
    // delta into q = 0 is the empty matrix, psi out of p_max is empty
    CHECK(c.delta_in(0, 0).cols() == 0);
    CHECK(c.psi[3][1].rows() == 0);
    CHECK(verify_double_complex(c).ok);
}

TEST_CASE("identity violations are detected in corrupted complexes") {
    SUBCASE("broken square of delta") {
        DoubleComplex bad = assemble(trivial_groupoid(cyclic(2)), 2, 3);
        REQUIRE(verify_double_complex(bad).ok);
        bad.delta[0][2] = bad.delta[0][2] + SparseMatrix(4, 2, {{0, 0, 1}});
        auto r = verify_double_complex(bad);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.identity.empty());
    }
    SUBCASE("broken square of psi") {
        DoubleComplex bad = assemble(trivial_algebroid(over_point(sl2())), 3, 2);
        REQUIRE(verify_double_complex(bad).ok);
        // send the constant to e^1, whose differential is nonzero
        bad.psi[0][0] = bad.psi[0][0] + SparseMatrix(3, 1, {{0, 0, 1}});
        CHECK_FALSE(verify_double_complex(bad).ok);
    }
}

TEST_CASE("total differential squares to zero with the sign twist") {
    for (const LAGroupoid& l :
         {trivial_algebroid(over_point(sl2())), trivial_groupoid(cyclic(2)),
          equivariant(over_point(heisenberg()), flip_action(heisenberg(), heis_flip()))}) {
        DoubleComplex c = assemble(l, 4, 4);
        for (std::size_t n = 0; n + 2 <= 4; ++n) {
            SparseMatrix d1 = total_matrix(c, n);
            SparseMatrix d2 = total_matrix(c, n + 1);
            CHECK((d2 * d1).is_zero());
        }
    }
}

TEST_CASE("total matrix places the antidiagonal blocks with (-1)^p") {
    DoubleComplex c = assemble(equivariant(over_point(sl2()), flip_action(sl2(), sl2_flip())), 2, 2);
    // degree 1 = C^{0,1} (+) C^{1,0} -> C^{0,2} (+) C^{1,1} (+) C^{2,0}
    SparseMatrix d = total_matrix(c, 1);
    REQUIRE(d.rows() == c.block(0, 2).dim + c.block(1, 1).dim + c.block(2, 0).dim);
    REQUIRE(d.cols() == c.block(0, 1).dim + c.block(1, 0).dim);
    // block rows: delta then psi for the p = 0 column, with sign (+1)^0
    for (std::size_t i = 0; i < c.block(0, 2).dim; ++i)
        for (std::size_t j = 0; j < c.block(0, 1).dim; ++j)
            CHECK(d.at(i, j) == c.delta[0][2].at(i, j));
    // the p = 1 summand contributes -delta in its row band
    std::size_t row0 = c.block(0, 2).dim;
    std::size_t col0 = c.block(0, 1).dim;
    for (std::size_t i = 0; i < c.block(1, 1).dim; ++i)
        for (std::size_t j = 0; j < c.block(1, 0).dim; ++j)
            CHECK(d.at(row0 + i, col0 + j) == -c.delta[1][1].at(i, j));
    CHECK_THROWS_AS(total_matrix(c, 2), WindowTooSmall);
}

TEST_CASE("total cohomology reproduces the one-sided oracles") {
    SUBCASE("identity groupoid squares compute fiberwise cohomology") {
        for (const LieAlgebra& g : {sl2(), heisenberg(), LieAlgebra(2)}) {
            DoubleComplex c = assemble(trivial_algebroid(over_point(g)), 4, 4);
            CohomologyTable t = total_cohomology(c, 3);
            CHECK(t.dims == reference::ce_dims_brute(g, 3));
        }
    }
    SUBCASE("zero-fiber squares compute groupoid cohomology") {
        for (const FiniteGroupoid& g : {cyclic(2), cyclic(3), pair_groupoid({"u", "v"})}) {
            DoubleComplex c = assemble(trivial_groupoid(g), 3, 3);
            CohomologyTable t = total_cohomology(c, 2);
            CHECK(t.dims == reference::nerve_cohomology_brute(g, 2));
        }
    }
    SUBCASE("window certification") {
        DoubleComplex c = assemble(trivial_algebroid(over_point(sl2())), 3, 3);
        CHECK_THROWS_AS(total_cohomology(c, 3), WindowTooSmall);
        CohomologyTable t = total_cohomology(c, 2);
        CHECK(t.p_window == 3);
        CHECK(t.q_window == 3);
        CHECK(t.dims == std::vector<std::size_t>{1, 0, 0});
    }
}

TEST_CASE("first page concentrates along the first-taken direction") {
    SUBCASE("delta first on an identity groupoid square") {
        DoubleComplex c = assemble(trivial_algebroid(over_point(sl2())), 3, 4);
        SpectralPage e1 = e1_page(c, Orientation::delta_first);
        CHECK(e1.page == 1);
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; q <= 4; ++q) {
                CHECK(e1.valid[p][q] == (q < 4));
                if (!e1.valid[p][q]) continue;
                // the q-direction is exact except at q = 0, where the fiber
                // forms survive untouched
                CHECK(e1.dims[p][q] == (q == 0 ? choose(3, p) : 0));
            }
        SpectralPage e2 = e2_page(c, Orientation::delta_first);
        std::vector<std::size_t> ce = ce_cohomology_dims(sl2(), 3);
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; q <= 4; ++q) {
                CHECK(e2.valid[p][q] == (p < 3 && q < 4));
                if (e2.valid[p][q]) CHECK(e2.dims[p][q] == (q == 0 ? ce[p] : 0));
            }
    }
    SUBCASE("psi first on a zero-fiber square") {
        DoubleComplex c = assemble(trivial_groupoid(cyclic(2)), 3, 3);
        SpectralPage e1 = e1_page(c, Orientation::psi_first);
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; q <= 3; ++q) {
                CHECK(e1.valid[p][q] == (p < 3));
                if (!e1.valid[p][q]) continue;
                CHECK(e1.dims[p][q] ==
                      (p == 0 ? (q == 0 ? 1 : (std::size_t(1) << q)) : 0));
            }
        SpectralPage e2 = e2_page(c, Orientation::psi_first);
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < 3; ++q)
                CHECK(e2.dims[p][q] == ((p == 0 && q == 0) ? 1 : 0));
    }
    SUBCASE("page validation") {
        DoubleComplex c = assemble(trivial_groupoid(cyclic(2)), 2, 2);
        SpectralPage e2 = e2_page(c, Orientation::delta_first);
        CHECK(e2.page == 2);
        CHECK(e2.orientation == Orientation::delta_first);
    }
}

TEST_CASE("restriction to invariants produces a genuine subcomplex") {
    LieAlgebra ab(2);
    LieFiberBundle bundle = over_point(ab);
    LAGroupoid l = vacant_matched_pair(cyclic(2), bundle,
                                       flip_action(ab, SparseMatrix(2, 2, {{0, 1, 1}, {1, 0, 1}})));
    LANerve nerve(l);
    DoubleComplex c = assemble(nerve, 3, 3);
    ComplexAction action = complex_action(nerve, c, {"a1"});

    RestrictedComplex r = invariant_subcomplex(c, action);
    CHECK(verify_double_complex(r.complex).ok);
    // swap-invariant forms on two generators have dimensions 1, 1, 0
    std::size_t tuples = 2;  // at q = 1
    CHECK(r.complex.block(0, 1).dim == tuples);
    CHECK(r.complex.block(1, 1).dim == tuples);
    CHECK(r.complex.block(2, 1).dim == 0);

    CohomologyTable t = total_cohomology(r.complex, 2);
    CHECK(t.dims == std::vector<std::size_t>{1, 1, 0});

    SUBCASE("restriction to the full bases is the identity operation") {
        std::vector<std::vector<Subspace>> full;
        for (std::size_t p = 0; p <= 3; ++p) {
            full.emplace_back();
            for (std::size_t q = 0; q <= 3; ++q)
                full[p].push_back(Subspace::full_space(c.block(p, q).dim));
        }
        RestrictedComplex same = restrict_complex(c, full);
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; q <= 3; ++q) {
                CHECK(same.complex.block(p, q).dim == c.block(p, q).dim);
                if (q >= 1) CHECK(same.complex.delta[p][q] == c.delta[p][q]);
                if (p < 3) CHECK(same.complex.psi[p][q] == c.psi[p][q]);
            }
    }
    SUBCASE("non-invariant subspaces are rejected") {
        // zero out C^{1,1}: the coboundary of the 1-forms is nonzero on the
        // flipped tuple, so its image escapes the subspace
        std::vector<std::vector<Subspace>> bad;
        for (std::size_t p = 0; p <= 3; ++p) {
            bad.emplace_back();
            for (std::size_t q = 0; q <= 3; ++q)
                bad[p].push_back(q == 1 && p == 1
                                     ? Subspace::zero_subspace(c.block(p, q).dim)
                                     : Subspace::full_space(c.block(p, q).dim));
        }
        CHECK_THROWS_AS(restrict_complex(c, bad), ActionNotCompatible);
    }
    SUBCASE("mismatched ambient dimensions are rejected") {
        std::vector<std::vector<Subspace>> wrong(4, std::vector<Subspace>(4, Subspace::full_space(1)));
        CHECK_THROWS_AS(restrict_complex(c, wrong), AmbientMismatch);
    }
    SUBCASE("non-commuting actions are rejected") {
        ComplexAction garbage = action;
        garbage.action[0][0][1] = SparseMatrix(2, 2, {{0, 1, 1}});  // nilpotent, no longer commutes
        CHECK_THROWS_AS(invariant_subcomplex(c, garbage), ActionNotCompatible);
    }
}

TEST_CASE("window stability of the reported dimensions") {
    LAGroupoid l = equivariant(over_point(sl2()), flip_action(sl2(), sl2_flip()));
    DoubleComplex small = assemble(l, 3, 3);
    DoubleComplex big = assemble(l, 5, 5);
    CHECK(total_cohomology(small, 2).dims == total_cohomology(big, 2).dims);
    SpectralPage p_small = e2_page(small, Orientation::delta_first);
    SpectralPage p_big = e2_page(big, Orientation::delta_first);
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            if (p_small.valid[p][q]) {
                CHECK(p_big.valid[p][q]);
                CHECK(p_small.dims[p][q] == p_big.dims[p][q]);
            }
}
