#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "laq/sparse_matrix.hpp"

namespace laq {

// Linear subspace of Q^n carried by an explicit basis. The basis is kept
// exactly as supplied (after an independence check) so structured bases
// survive; operations that *produce* subspaces emit a canonical basis, so
// equal spans always get equal bases. Row-space-derived operations emit
// primitive integer echelon rows; kernel emits the pivot-solved solutions.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, std::vector<Vec> basis);

    static Subspace zero_subspace(std::size_t ambient_dim);
    static Subspace full_space(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    // basis vectors as rows / as columns
    SparseMatrix as_rows() const;
    SparseMatrix as_columns() const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool same_span(const Subspace& other) const;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

std::size_t rank(const SparseMatrix& m);

// canonical basis of { x : m x = 0 }: one vector per free column of the
// reduced echelon form, with a unit entry on its free column
Subspace kernel(const SparseMatrix& m);

// canonical basis of the column space of m
Subspace image(const SparseMatrix& m);

// canonical basis of the row space of m
Subspace row_space(const SparseMatrix& m);

// canonical basis of a ∩ b (Zassenhaus); ambient dims must agree
Subspace intersect(const Subspace& a, const Subspace& b);

// canonical basis of a + b; ambient dims must agree
Subspace join(const Subspace& a, const Subspace& b);

// image of s under m, canonical basis
Subspace map_subspace(const SparseMatrix& m, const Subspace& s);

// dim(outer / inner); throws ContainmentViolation unless inner ⊆ outer
std::size_t subquotient_dim(const Subspace& outer, const Subspace& inner);

// one solution of m x = rhs, or nullopt when inconsistent
std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs);

// coordinates of v in the basis of s, or nullopt when v ∉ s
std::optional<Vec> coordinates(const Subspace& s, const Vec& v);

}  // namespace laq
