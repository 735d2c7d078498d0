#pragma once

#include <cstdint>
#include <vector>

#include "laq/groupoid.hpp"
#include "laq/lie_algebra.hpp"

namespace laq::reference {

// Deliberately naive, dense second implementations of quantities the engine
// computes with sparse machinery. The self-test suite compares the two; keep
// these independent of exactla's elimination and of the derivation calculus.

// rank over Q by textbook Gaussian elimination
std::size_t dense_rank(const SparseMatrix& m);

// Jacobi identity checked over every basis triple, repeats included
bool jacobi_brute(const LieAlgebra& g);

// bar coboundary C^{q-1} → C^q of the nerve with rational coefficients,
// tuples enumerated lexicographically by arrow index
SparseMatrix nerve_coboundary_brute(const FiniteGroupoid& g, std::uint32_t q);

// groupoid cohomology dims in degrees 0..N from dense coboundary ranks
std::vector<std::size_t> nerve_cohomology_brute(const FiniteGroupoid& g, std::size_t N);

// Lie algebra cochain differential ⋀^p 𝔤* → ⋀^{p+1} 𝔤* by the alternating
// evaluation formula on basis subsets
SparseMatrix ce_coboundary_brute(const LieAlgebra& g, std::uint32_t p);

// cohomology dims of that complex in degrees 0..p_max
std::vector<std::size_t> ce_dims_brute(const LieAlgebra& g, std::uint32_t p_max);

// pullback action of a fiber matrix on ⋀^p, entries p×p minors
SparseMatrix form_action_brute(const SparseMatrix& m, std::uint32_t p);

// Cohomology dims of the subcomplex of forms fixed by every element of the
// group, computed through averaging projectors; `group` lists the matrices of
// all group elements on the fiber (identity included) and must act by Lie
// algebra automorphisms.
std::vector<std::size_t> invariant_ce_dims_brute(const LieAlgebra& g,
                                                 const std::vector<SparseMatrix>& group,
                                                 std::uint32_t p_max);

}  // namespace laq::reference
