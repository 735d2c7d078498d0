#include <doctest.h>

#include "laq/errors.hpp"
#include "laq/groupoid.hpp"
#include "laq/reference.hpp"
#include "support.hpp"

using namespace laq;
using namespace laq::testing;

TEST_CASE("construction sorts labels and checks references") {
    FiniteGroupoid g({"y", "x"}, {{"b", "y", "x"}, {"a", "x", "y"}}, {}, {}, {});
    CHECK(g.object_label(0) == "x");
    CHECK(g.object_label(1) == "y");
    CHECK(g.arrow_label(0) == "a");
    CHECK(g.src(*g.arrow_index("a")) == *g.object_index("x"));
    CHECK(g.tgt(*g.arrow_index("a")) == *g.object_index("y"));
    CHECK_FALSE(g.object_index("z").has_value());

    CHECK_THROWS_AS(FiniteGroupoid({"x"}, {{"a", "x", "zz"}}, {}, {}, {}), MalformedInput);
    CHECK_THROWS_AS(FiniteGroupoid({"x", "x"}, {}, {}, {}, {}), MalformedInput);
    CHECK_THROWS_AS(FiniteGroupoid({"x"}, {{"a", "x", "x"}, {"a", "x", "x"}}, {}, {}, {}),
                    MalformedInput);
    CHECK_THROWS_AS(FiniteGroupoid({"x"}, {{"a", "x", "x"}}, {{"a", "b", "a"}}, {}, {}),
                    MalformedInput);
    CHECK_THROWS_AS(FiniteGroupoid({"x"}, {{"a", "x", "x"}}, {}, {{"y", "a"}}, {}),
                    MalformedInput);
}

TEST_CASE("axiom validation names the failing law") {
    CHECK(validate_groupoid(cyclic(1)).ok);
    CHECK(validate_groupoid(cyclic(4)).ok);
    CHECK(validate_groupoid(pair_groupoid({"u", "v", "w"})).ok);
    CHECK(validate_groupoid(identity_groupoid({"p", "q"})).ok);

    SUBCASE("missing product on a composable pair") {
        FiniteGroupoid g({"x"}, {{"1", "x", "x"}}, {}, {{"x", "1"}}, {{"1", "1"}});
        auto r = validate_groupoid(g);
        CHECK_FALSE(r.ok);
        CHECK(r.axiom == "composability");
        CHECK(r.witness.find("undefined") != std::string::npos);
    }
    SUBCASE("broken inverse law") {
        // Z/3 with a1 · a2 redirected to a1; the declared inverses no longer
        // multiply to the unit
        FiniteGroupoid g({"pt"},
                         {{"1", "pt", "pt"}, {"a1", "pt", "pt"}, {"a2", "pt", "pt"}},
                         {{"1", "1", "1"},
                          {"1", "a1", "a1"},
                          {"1", "a2", "a2"},
                          {"a1", "1", "a1"},
                          {"a2", "1", "a2"},
                          {"a1", "a1", "a2"},
                          {"a1", "a2", "a1"},
                          {"a2", "a1", "1"},
                          {"a2", "a2", "a1"}},
                         {{"pt", "1"}},
                         {{"1", "1"}, {"a1", "a2"}, {"a2", "a1"}});
        auto r = validate_groupoid(g);
        CHECK_FALSE(r.ok);
        CHECK(r.axiom == "inverse");
    }
    SUBCASE("broken associativity") {
        // Z/4 with a1 · a1 redirected to a3: units and the two-sided inverse
        // pairs survive, (a1 a1) a2 departs from a1 (a1 a2)
        FiniteGroupoid g = group_groupoid(
            "pt", {"1", "a1", "a2", "a3"},
            {{0, 1, 2, 3}, {1, 3, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
        auto r = validate_groupoid(g);
        CHECK_FALSE(r.ok);
        CHECK(r.axiom == "associativity");
    }
    SUBCASE("wrong hom set") {
        FiniteGroupoid g({"x", "y"},
                         {{"ix", "x", "x"}, {"iy", "y", "y"}, {"f", "x", "y"}, {"g", "y", "x"}},
                         {{"ix", "ix", "ix"},
                          {"iy", "iy", "iy"},
                          {"f", "ix", "f"},
                          {"iy", "f", "f"},
                          {"g", "iy", "g"},
                          {"ix", "g", "g"},
                          {"g", "f", "ix"},
                          {"f", "g", "ix"}},  // f∘g should land in hom(y,y)
                         {{"x", "ix"}, {"y", "iy"}},
                         {{"ix", "ix"}, {"iy", "iy"}, {"f", "g"}, {"g", "f"}});
        auto r = validate_groupoid(g);
        CHECK_FALSE(r.ok);
        CHECK(r.axiom == "composability");
        CHECK(r.witness.find("endpoints") != std::string::npos);
    }
}

TEST_CASE("nerve enumeration is lexicographic in arrow labels") {
    FiniteGroupoid z2 = cyclic(2);
    CHECK(nerve(z2, 0).size() == 1);
    CHECK(nerve(z2, 1).size() == 2);
    CHECK(nerve(z2, 3).size() == 8);
    auto level2 = nerve(z2, 2);
    REQUIRE(level2.size() == 4);
    CHECK(level2[0].arrows == std::vector<std::uint32_t>{0, 0});
    CHECK(level2[1].arrows == std::vector<std::uint32_t>{0, 1});
    CHECK(level2[2].arrows == std::vector<std::uint32_t>{1, 0});
    CHECK(level2[3].arrows == std::vector<std::uint32_t>{1, 1});
    CHECK(to_string(z2, level2[2]) == "(a1, 1)");
    CHECK(to_string(z2, nerve(z2, 0)[0]) == "[pt]");

    // pair groupoid on n points has n^{q+1} composable q-tuples
    FiniteGroupoid p3 = pair_groupoid({"u", "v", "w"});
    CHECK(nerve(p3, 0).size() == 3);
    CHECK(nerve(p3, 1).size() == 9);
    CHECK(nerve(p3, 2).size() == 27);

    // tuples must be composable head to tail
    FiniteGroupoid p2 = pair_groupoid({"u", "v"});
    for (const auto& t : nerve(p2, 2))
        CHECK(p2.src(t.arrows[0]) == p2.tgt(t.arrows[1]));
}

TEST_CASE("faces drop or multiply and degeneracies insert units") {
    FiniteGroupoid z4 = cyclic(4);
    std::uint32_t a1 = *z4.arrow_index("a1"), a2 = *z4.arrow_index("a2"),
                  a3 = *z4.arrow_index("a3");
    ComposableTuple t{2, 0, {a1, a2}};

    CHECK(face(z4, 2, 0, t).arrows == std::vector<std::uint32_t>{a2});
    CHECK(face(z4, 2, 1, t).arrows == std::vector<std::uint32_t>{a3});  // a1∘a2
    CHECK(face(z4, 2, 2, t).arrows == std::vector<std::uint32_t>{a1});

    // level 1: faces are the source and target objects
    ComposableTuple one{1, 0, {a1}};
    CHECK(face(z4, 1, 0, one) == ComposableTuple{0, z4.src(a1), {}});
    CHECK(face(z4, 1, 1, one) == ComposableTuple{0, z4.tgt(a1), {}});

    std::uint32_t u = *z4.arrow_index("1");
    CHECK(degeneracy(z4, 2, 0, t).arrows == std::vector<std::uint32_t>{u, a1, a2});
    CHECK(degeneracy(z4, 2, 1, t).arrows == std::vector<std::uint32_t>{a1, u, a2});
    CHECK(degeneracy(z4, 2, 2, t).arrows == std::vector<std::uint32_t>{a1, a2, u});
    CHECK(degeneracy(z4, 0, 0, ComposableTuple{0, 0, {}}).arrows ==
          std::vector<std::uint32_t>{u});

    CHECK_THROWS_AS(face(z4, 2, 3, t), IndexOutOfRange);
    CHECK_THROWS_AS(face(z4, 0, 0, ComposableTuple{0, 0, {}}), DegreeMismatch);
    CHECK_THROWS_AS(face(z4, 2, 0, one), DegreeMismatch);
}

TEST_CASE("simplicial identities hold and mutations are caught") {
    CHECK(check_simplicial_identities(cyclic(3), 4).ok);
    CHECK(check_simplicial_identities(pair_groupoid({"u", "v"}), 4).ok);
    CHECK(check_simplicial_identities(identity_groupoid({"p"}), 3).ok);

    // swap the two outer faces: the mixed identities break
    FaceFn mutant = [](const FiniteGroupoid& g, std::uint32_t q, std::uint32_t i,
                       const ComposableTuple& t) {
        if (q >= 2 && i == 0) return face(g, q, q, t);
        if (q >= 2 && i == q) return face(g, q, 0, t);
        return face(g, q, i, t);
    };
    auto r = check_simplicial_identities(cyclic(3), 3, mutant);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.identity.empty());
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("bar coboundary of the nerve squares to zero") {
    for (const FiniteGroupoid& g : {cyclic(2), cyclic(3), pair_groupoid({"u", "v"})}) {
        for (std::uint32_t q = 1; q <= 3; ++q) {
            SparseMatrix d1 = reference::nerve_coboundary_brute(g, q);
            SparseMatrix d2 = reference::nerve_coboundary_brute(g, q + 1);
            CHECK((d2 * d1).is_zero());
            CHECK(d1.rows() == nerve(g, q).size());
            CHECK(d1.cols() == nerve(g, q - 1).size());
        }
        CHECK(reference::nerve_cohomology_brute(g, 2)[0] == 1);
    }
}

TEST_CASE("canned groupoids have the advertised shape") {
    // Klein four group: every element is its own inverse
    FiniteGroupoid v4 = group_groupoid(
        "pt", {"e", "i", "j", "k"},
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    CHECK(validate_groupoid(v4).ok);
    CHECK(v4.arrow_count() == 4);
    for (std::uint32_t g = 0; g < 4; ++g) CHECK(v4.inv(g) == g);

    FiniteGroupoid p2 = pair_groupoid({"u", "v"});
    CHECK(p2.arrow_count() == 4);
    CHECK(p2.object_count() == 2);
    std::uint32_t uu = p2.unit(*p2.object_index("u"));
    CHECK(p2.src(uu) == p2.tgt(uu));

    FiniteGroupoid ids = identity_groupoid({"p", "q"});
    CHECK(ids.arrow_count() == 2);
    for (std::uint32_t g = 0; g < 2; ++g) CHECK(ids.inv(g) == g);

    CHECK_THROWS_AS(group_groupoid("pt", {}, {}), EmptySet);
    CHECK_THROWS_AS(pair_groupoid({}), EmptySet);
    // a table without a two-sided identity is rejected at construction
    CHECK_THROWS_AS(group_groupoid("pt", {"a", "b"}, {{0, 0}, {0, 0}}), MalformedInput);
}
