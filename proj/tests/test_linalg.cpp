#include <doctest.h>

#include <random>

#include "laq/errors.hpp"
#include "laq/linalg.hpp"
#include "laq/rational.hpp"
#include "laq/reference.hpp"
#include "laq/sparse_matrix.hpp"

using namespace laq;

TEST_CASE("rational parse and print round trip") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-2)) == "-2");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("sparse matrix algebra") {
    SparseMatrix a(2, 3, {{0, 0, 1}, {0, 2, 2}, {1, 1, -1}});
    SparseMatrix b(3, 2, {{0, 0, 1}, {1, 0, 3}, {2, 1, 1}});

    SUBCASE("product and identity") {
        SparseMatrix ab = a * b;
        CHECK(ab.rows() == 2);
        CHECK(ab.cols() == 2);
        CHECK(ab.at(0, 0) == Rational(1));
        CHECK(ab.at(0, 1) == Rational(2));
        CHECK(ab.at(1, 0) == Rational(-3));
        CHECK(ab.at(1, 1) == Rational(0));
        CHECK(SparseMatrix::identity(2) * a == a);
        CHECK(a * SparseMatrix::identity(3) == a);
    }
    SUBCASE("sum, difference, scaling") {
        CHECK(a + a == a.scaled(2));
        CHECK((a - a).is_zero());
        CHECK(a.scaled(Rational(1, 2)).at(0, 2) == Rational(1));
    }
    SUBCASE("transpose is an involution and reverses products") {
        CHECK(a.transpose().transpose() == a);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
    SUBCASE("apply agrees with the product") {
        Vec x = {1, 2, 3};
        Vec y = a.apply(x);
        REQUIRE(y.size() == 2);
        CHECK(y[0] == Rational(7));
        CHECK(y[1] == Rational(-2));
    }
    SUBCASE("duplicate triplets accumulate, zeros vanish") {
        SparseMatrix c(1, 1, {{0, 0, 1}, {0, 0, -1}});
        CHECK(c.is_zero());
        CHECK(c.nonzero_count() == 0);
    }
}

TEST_CASE("stacking and tensor products") {
    SparseMatrix a(2, 2, {{0, 0, 1}, {1, 1, 2}});
    SparseMatrix b(1, 3, {{0, 1, 5}});

    SparseMatrix h = hstack(a, SparseMatrix(2, 3, {{0, 0, 7}}));
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 5);
    CHECK(h.at(0, 2) == Rational(7));
    CHECK(h.at(1, 1) == Rational(2));

    SparseMatrix v = vstack(b, SparseMatrix(2, 3, {{1, 2, -1}}));
    CHECK(v.rows() == 3);
    CHECK(v.at(0, 1) == Rational(5));
    CHECK(v.at(2, 2) == Rational(-1));

    SparseMatrix d = block_diag(a, b);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 5);
    CHECK(d.at(1, 1) == Rational(2));
    CHECK(d.at(2, 3) == Rational(5));
    CHECK(d.at(0, 3) == Rational(0));

    // (a (x) b)[(i rb + k), (j cb + l)] = a[i,j] b[k,l]
    SparseMatrix k = kronecker(a, b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 6);
    CHECK(k.at(0, 1) == Rational(5));
    CHECK(k.at(1, 4) == Rational(10));
    // mixed-product property (a c) (x) (b d) = (a (x) b)(c (x) d)
    SparseMatrix c(2, 3, {{0, 0, 1}, {1, 2, 3}});
    SparseMatrix e(3, 2, {{0, 1, 1}, {1, 0, 2}, {2, 0, -1}});
    CHECK(kronecker(a * c, b * e) == kronecker(a, b) * kronecker(c, e));
}

TEST_CASE("rank matches the dense elimination oracle") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        std::vector<SparseMatrix::Triplet> ts;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                int v = val(rng);
                if (v != 0) ts.push_back({i, j, v});
            }
        SparseMatrix m(r, c, ts);
        CHECK(rank(m) == reference::dense_rank(m));
    }
    CHECK(rank(SparseMatrix(4, 4)) == 0);
    CHECK(rank(SparseMatrix::identity(5)) == 5);
}

TEST_CASE("kernel emits the pivot-solved special solutions") {
    // rref of [1 2 3] has free columns 1 and 2
    SparseMatrix m(1, 3, {{0, 0, 1}, {0, 1, 2}, {0, 2, 3}});
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 2);
    CHECK(k.basis()[0] == Vec{-2, 1, 0});
    CHECK(k.basis()[1] == Vec{-3, 0, 1});
    for (const Vec& v : k.basis()) {
        Vec image_vec = m.apply(v);
        for (const Rational& x : image_vec) CHECK(x == Rational(0));
    }
    CHECK(kernel(SparseMatrix::identity(3)).dim() == 0);
    CHECK(kernel(SparseMatrix(2, 3)).dim() == 3);
}

TEST_CASE("rank-nullity across random matrices") {
    std::mt19937 rng(7151);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SparseMatrix::Triplet> ts;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                int v = val(rng);
                if (v != 0) ts.push_back({i, j, v});
            }
        SparseMatrix m(4, 5, ts);
        CHECK(rank(m) + kernel(m).dim() == 5);
        CHECK(image(m).dim() == rank(m));
        CHECK(row_space(m).dim() == rank(m));
    }
}

TEST_CASE("row space basis is primitive integer echelon") {
    SparseMatrix m(2, 3, {{0, 0, 2}, {0, 1, 4}, {1, 1, 3}, {1, 2, 6}});
    Subspace r = row_space(m);
    REQUIRE(r.dim() == 2);
    // echelon with primitive integer rows and pivot-cleared columns
    CHECK(r.basis()[0] == Vec{1, 0, -4});
    CHECK(r.basis()[1] == Vec{0, 1, 2});
}

TEST_CASE("subspace membership and span comparison") {
    Subspace s(3, {Vec{1, 0, 1}, Vec{0, 1, 0}});
    CHECK(s.contains(Vec{2, 3, 2}));
    CHECK_FALSE(s.contains(Vec{1, 0, 0}));
    Subspace t(3, {Vec{1, 1, 1}, Vec{1, -1, 1}});
    CHECK(s.same_span(t));
    CHECK(s.contains(t));
    CHECK(Subspace::full_space(3).contains(s));
    CHECK(s.contains(Subspace::zero_subspace(3)));
    CHECK_FALSE(t.same_span(Subspace::full_space(3)));
    CHECK_THROWS_AS(Subspace(3, {Vec{1, 0, 0}, Vec{2, 0, 0}}), MalformedInput);
}

TEST_CASE("intersection and join satisfy the dimension formula") {
    std::mt19937 rng(99021);
    std::uniform_int_distribution<int> val(-2, 2);
    auto random_subspace = [&](std::size_t n, std::size_t gens) {
        std::vector<SparseMatrix::Triplet> ts;
        for (std::size_t i = 0; i < gens; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int v = val(rng);
                if (v != 0) ts.push_back({i, j, v});
            }
        return row_space(SparseMatrix(gens, n, ts));
    };
    for (int trial = 0; trial < 25; ++trial) {
        Subspace a = random_subspace(5, 3);
        Subspace b = random_subspace(5, 3);
        Subspace meet = intersect(a, b);
        Subspace span = join(a, b);
        CHECK(meet.dim() + span.dim() == a.dim() + b.dim());
        CHECK(a.contains(meet));
        CHECK(b.contains(meet));
        CHECK(span.contains(a));
        CHECK(span.contains(b));
        for (const Vec& v : meet.basis()) {
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
    CHECK_THROWS_AS(intersect(Subspace::full_space(2), Subspace::full_space(3)),
                    AmbientMismatch);
}

TEST_CASE("map_subspace, subquotient, solve, coordinates") {
    SparseMatrix m(2, 3, {{0, 0, 1}, {1, 1, 1}});
    Subspace s(3, {Vec{1, 0, 0}, Vec{0, 0, 1}});
    Subspace ms = map_subspace(m, s);
    CHECK(ms.ambient_dim() == 2);
    CHECK(ms.dim() == 1);
    CHECK(ms.contains(Vec{1, 0}));

    Subspace outer(3, {Vec{1, 0, 0}, Vec{0, 1, 0}});
    Subspace inner(3, {Vec{1, 1, 0}});
    CHECK(subquotient_dim(outer, inner) == 1);
    CHECK(subquotient_dim(outer, outer) == 0);
    Subspace off(3, {Vec{0, 0, 1}});
    CHECK_THROWS_AS(subquotient_dim(outer, off), ContainmentViolation);

    auto x = solve(m, Vec{5, 7});
    REQUIRE(x.has_value());
    Vec mx = m.apply(*x);
    CHECK(mx == Vec{5, 7});
    SparseMatrix bad(2, 1, {{0, 0, 1}, {1, 0, 1}});
    CHECK_FALSE(solve(bad, Vec{1, 2}).has_value());

    auto c = coordinates(s, Vec{3, 0, -2});
    REQUIRE(c.has_value());
    CHECK(*c == Vec{3, -2});
    CHECK_FALSE(coordinates(s, Vec{0, 1, 0}).has_value());
}
