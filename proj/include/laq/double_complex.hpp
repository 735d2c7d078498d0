#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "laq/la_groupoid.hpp"

namespace laq {

// One summand coordinate of a block: a form monomial sitting over a tuple.
struct BlockLabel {
    std::size_t tuple = 0;
    Monomial monomial;
    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

// Basis bookkeeping for C^{p,q} = ⊕_ḡ ⋀^p (Ω^(q)_ḡ)*. Restricted complexes
// (invariant subcomplexes) drop the labels and keep only the dimension.
struct Block {
    std::size_t dim = 0;
    std::vector<std::size_t> tuple_offset;  // prefix sums, size = tuple count + 1
    std::vector<BlockLabel> labels;
};

// The truncated double complex. Stored matrices are unsigned: delta[p][q] is
// the coboundary C^{p,q-1} → C^{p,q} (defined for q ≥ 1) and psi[p][q] the
// fiberwise differential C^{p,q} → C^{p+1,q} (defined for p < p_max). The
// (−1)^p of the total differential appears only in total_matrix.
struct DoubleComplex {
    std::size_t p_max = 0;
    std::size_t q_max = 0;
    std::vector<std::vector<Block>> blocks;        // [p][q]
    std::vector<std::vector<SparseMatrix>> delta;  // [p][q], q >= 1; [p][0] is dim x 0
    std::vector<std::vector<SparseMatrix>> psi;    // [p][q], p < p_max; [p_max][q] is 0 x dim

    const Block& block(std::size_t p, std::size_t q) const { return blocks.at(p).at(q); }
    // δ out of (p,q), defined when q < q_max
    const SparseMatrix& delta_out(std::size_t p, std::size_t q) const {
        return delta.at(p).at(q + 1);
    }
    // δ into (p,q); for q = 0 a dim x 0 matrix
    const SparseMatrix& delta_in(std::size_t p, std::size_t q) const { return delta.at(p).at(q); }
    // ψ out of (p,q), defined when p < p_max
    const SparseMatrix& psi_out(std::size_t p, std::size_t q) const { return psi.at(p).at(q); }
};

// Builds blocks, δ (alternating sums of exterior pullbacks along the nerve
// faces) and ψ (blockwise lifted differentials), then verifies the
// double-complex identities; a failure throws IdentityViolation naming the
// block (unreachable for validated input).
DoubleComplex assemble(LANerve& nerve, std::size_t p_max, std::size_t q_max);
DoubleComplex assemble(const LAGroupoid& l, std::size_t p_max, std::size_t q_max);

struct IdentityCheckResult {
    bool ok = false;
    std::string identity;  // "delta.delta", "psi.psi", "commutation", "total"
    std::size_t p = 0, q = 0;
    explicit operator bool() const { return ok; }
};

// δ² = 0, ψ² = 0, ψδ = δψ and D² = 0, blockwise inside the window
IdentityCheckResult verify_double_complex(const DoubleComplex& c);

// D = ψ + (−1)^p δ from total degree n to n+1; blocks ordered by p ascending
SparseMatrix total_matrix(const DoubleComplex& c, std::size_t n);

struct CohomologyTable {
    std::vector<std::size_t> dims;  // H^0 .. H^N
    std::size_t p_window = 0;
    std::size_t q_window = 0;
    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

// exact dims of ker D / im D for total degrees 0..N; requires window ≥ (N+1, N+1)
CohomologyTable total_cohomology(const DoubleComplex& c, std::size_t N);

enum class Orientation { delta_first, psi_first };

struct SpectralPage {
    int page = 1;
    Orientation orientation = Orientation::delta_first;
    std::vector<std::vector<std::size_t>> dims;  // [p][q]
    std::vector<std::vector<bool>> valid;        // truncation mask
    friend bool operator==(const SpectralPage&, const SpectralPage&) = default;
};

// First page: cohomology in the q-direction (delta-first) or p-direction
// (psi-first). The outermost band in the direction taken first is masked.
SpectralPage e1_page(const DoubleComplex& c, Orientation orientation);

// Second page, computed on subquotient representatives with exact
// intersections; masks one band in each direction.
SpectralPage e2_page(const DoubleComplex& c, Orientation orientation);

// Per-generator linear action on every block of a complex.
struct ComplexAction {
    // action[gen][p][q]: square matrix on C^{p,q}
    std::vector<std::vector<std::vector<SparseMatrix>>> action;
};

struct RestrictedComplex {
    DoubleComplex complex;
    std::vector<std::vector<Subspace>> bases;  // block bases inside the original C^{p,q}
};

// Restricts every block to the given subspaces, rewriting δ and ψ in those
// bases; throws ActionNotCompatible when a differential leaves the subspaces.
RestrictedComplex restrict_complex(const DoubleComplex& c,
                                   const std::vector<std::vector<Subspace>>& bases);

// Kernel of (action − id) over all generators, blockwise, then restrict.
// Generators must commute with δ and ψ; otherwise ActionNotCompatible.
RestrictedComplex invariant_subcomplex(const DoubleComplex& c, const ComplexAction& action);

}  // namespace laq
