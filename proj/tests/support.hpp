#pragma once

// Shared fixtures for the unit tests: small algebras, groupoids and actions
// that several suites exercise from different angles.

#include <cstdint>
#include <string>
#include <vector>

#include "laq/builders.hpp"
#include "laq/groupoid.hpp"
#include "laq/lie_algebra.hpp"

namespace laq::testing {

inline LieAlgebra sl2() {
    // basis (e, f, h): [e,f] = h, [e,h] = -2e, [f,h] = 2f
    return LieAlgebra(3, {{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}});
}

inline LieAlgebra heisenberg() {
    // basis (x, y, z): [x,y] = z
    return LieAlgebra(3, {{0, 1, 2, 1}});
}

inline LieFiberBundle over_point(LieAlgebra a) {
    return {{"pt"}, {std::move(a)}};
}

// one-object groupoid for Z/n with elements "1", "a1", ..., "a<n-1>"
inline FiniteGroupoid cyclic(std::size_t n) {
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < n; ++i)
        elems.push_back(i == 0 ? "1" : "a" + std::to_string(i));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return group_groupoid("pt", elems, table);
}

// order-2 automorphism of sl2 in the (e, f, h) basis: e <-> f, h -> -h
inline SparseMatrix sl2_flip() {
    return SparseMatrix(3, 3, {{0, 1, 1}, {1, 0, 1}, {2, 2, -1}});
}

// order-2 automorphism of the Heisenberg algebra: x <-> y, z -> -z
inline SparseMatrix heis_flip() { return sl2_flip(); }

// Z/2 acting on the one-point bundle with fiber a, the generator by L
inline GroupActionOnBundle flip_action(const LieAlgebra& a, const SparseMatrix& L) {
    FiniteGroupoid g = cyclic(2);
    GroupActionOnBundle action{g, {}};
    action.lifts.assign(2, LinearLieMorphism{a, a, SparseMatrix::identity(a.dim())});
    action.lifts[*g.arrow_index("a1")].matrix = L;
    return action;
}

inline std::string fixture(const std::string& name) {
    return std::string(LAQ_FIXTURES) + "/" + name;
}

}  // namespace laq::testing
