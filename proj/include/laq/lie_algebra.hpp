#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "laq/exterior.hpp"
#include "laq/linalg.hpp"

namespace laq {

// Finite-dimensional rational Lie algebra given by structure constants on a
// fixed basis e_1, ..., e_n. Only pairs i < j are stored; antisymmetry is
// materialized. Jacobi is *not* checked here; validate_lie reports it.
class LieAlgebra {
public:
    explicit LieAlgebra(std::uint32_t dim) : dim_(dim) {}
    // entries (i, j, k, c): [e_i, e_j] has coefficient c on e_k; requires i < j
    // (0-based) and accumulates duplicates
    LieAlgebra(std::uint32_t dim, const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Rational>>& entries);

    std::uint32_t dim() const { return dim_; }

    // [e_i, e_j] for any i, j
    Vec bracket_basis(std::uint32_t i, std::uint32_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    // stored (i, j) -> coefficient vector, i < j, nonzero only
    const std::map<std::pair<std::uint32_t, std::uint32_t>, Vec>& table() const { return table_; }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    std::uint32_t dim_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Vec> table_;
};

struct JacobiResult {
    bool ok = false;
    // basis triple (i, j, k) with the nonzero Jacobi sum, when !ok
    std::optional<std::array<std::uint32_t, 3>> triple;
    std::optional<Vec> defect;
    explicit operator bool() const { return ok; }
};

// exhaustive Jacobi check over basis triples i < j < k
JacobiResult validate_lie(const LieAlgebra& g);

// Differential of the cochain complex of g with trivial coefficients, from
// degree p to degree p+1, on the exterior basis of the dual frame.
// On generators: d e^k = -sum_{i<j} c_{ij}^k e^i ^ e^j.
SparseMatrix ce_matrix(const LieAlgebra& g, std::uint32_t p);

// cohomology dimensions of that complex in degrees 0..p_max
std::vector<std::size_t> ce_cohomology_dims(const LieAlgebra& g, std::uint32_t p_max);

// the shifted model of g: its dual frame together with the differential above
struct ShiftedAlgebra {
    ExteriorFrame frame;
    DerivationSpec differential;
};
ShiftedAlgebra shifted_frame(const LieAlgebra& g);

// Linear map source -> target in the chosen bases; matrix is
// target.dim() x source.dim().
struct LinearLieMorphism {
    LieAlgebra source;
    LieAlgebra target;
    SparseMatrix matrix;
};

struct MorphismResult {
    bool ok = false;
    // basis pair (i, j) with f[e_i,e_j] != [f e_i, f e_j], when !ok
    std::optional<std::pair<std::uint32_t, std::uint32_t>> pair;
    std::optional<Vec> defect;
    explicit operator bool() const { return ok; }
};

MorphismResult is_lie_morphism(const LinearLieMorphism& f);

struct RelatednessResult {
    bool ok = false;
    // generator of the codomain frame where the pulled-back images disagree
    std::optional<std::uint32_t> generator;
    std::optional<Element> residue;
    explicit operator bool() const { return ok; }
};

// Checks that the fields are related along the linear map with matrix L:
// substituting L into d_target of a generator equals d_source applied to the
// substitution. Generators suffice because both sides are derivations along
// the pullback.
RelatednessResult is_related(const SparseMatrix& L, const DerivationSpec& d_source,
                             const DerivationSpec& d_target);

// Vector bundle of Lie algebras over a finite point set. Over a finite base
// every vector field vanishes, so the anchor is identically zero and the
// bracket is purely fiberwise; that convention is baked into this type.
struct LieFiberBundle {
    std::vector<std::string> base;   // point labels, strictly increasing
    std::vector<LieAlgebra> fibers;  // one per point
    friend bool operator==(const LieFiberBundle&, const LieFiberBundle&) = default;
};

// checks label ordering/uniqueness and fiber count
void check_bundle(const LieFiberBundle& b);

// exhaustive Jacobi check fiber by fiber; reports the first failing point
struct BundleJacobiResult {
    bool ok = false;
    std::optional<std::string> point;
    JacobiResult fiber;
    explicit operator bool() const { return ok; }
};
BundleJacobiResult validate_bundle(const LieFiberBundle& b);

}  // namespace laq
