#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laq/groupoid.hpp"
#include "laq/lie_algebra.hpp"

namespace laq {

// The square of structures: a finite groupoid G ⇉ M on the vertical sides and
// Lie algebra bundles Ω → G, A → M on the horizontal ones, glued by linear
// source/target/multiplication/unit/inverse maps that make Ω ⇉ A a groupoid
// in the category of Lie algebra bundles. mult_lin is stored as a full matrix
// on the direct sum Ω_g ⊕ Ω_h; only its restriction to the fiber product is
// meaningful, and only that restriction is ever validated or used.
struct LAGroupoid {
    FiniteGroupoid base;
    LieFiberBundle side;  // fibers A_x, indexed like base objects
    LieFiberBundle top;   // fibers Ω_g, indexed like base arrows

    std::vector<SparseMatrix> src_lin;  // per arrow: Ω_g → A_{src(g)}
    std::vector<SparseMatrix> tgt_lin;  // per arrow: Ω_g → A_{tgt(g)}
    // per composable (g, h): Ω_g ⊕ Ω_h → Ω_{g∘h}
    std::map<std::pair<std::uint32_t, std::uint32_t>, SparseMatrix> mult_lin;
    std::vector<SparseMatrix> unit_lin;  // per object: A_x → Ω_{unit(x)}
    std::vector<SparseMatrix> inv_lin;   // per arrow: Ω_g → Ω_{g⁻¹}

    friend bool operator==(const LAGroupoid&, const LAGroupoid&) = default;
};

// dimension/label alignment of all tables; throws MalformedInput
void check_la_shape(const LAGroupoid& l);

struct LACheckResult {
    bool ok = false;
    std::string check;    // failing check name, empty when ok
    std::string witness;  // offending arrows/objects and the defect
    explicit operator bool() const { return ok; }
};

// Full validation with named witnesses:
//  (a) src_lin/tgt_lin fiberwise surjective Lie algebra morphisms,
//  (b) linear groupoid laws on fiber products (source/target of products,
//      unit laws, inverse laws, associativity on triple fiber products),
//  (c) mult_lin restricted to the fiber-product subalgebra is a Lie morphism,
//  (d) unit_lin/inv_lin are Lie morphisms.
// Base groupoid axioms and fiberwise Jacobi are rechecked first so a caller
// that skipped them still gets a witness instead of garbage.
LACheckResult validate_la(const LAGroupoid& l);

// true iff src_lin is a linear isomorphism on every fiber; the induced map
// Ω → G ×_M A, ω ↦ (g, s̃ω), is then bijective
bool vacancy_check(const LAGroupoid& l);

// Level-q fiber: the compatibility subspace of ⊕_i Ω_{g_i} cut out by
// src_lin(v_i) = tgt_lin(v_{i+1}), with the induced bracket in its basis.
struct NerveFiber {
    ComposableTuple tuple;
    Subspace basis;      // vectors in the direct-sum coordinates
    LieAlgebra algebra;  // structure constants in that basis
};

struct NerveAlgebroid {
    std::uint32_t level = 0;
    std::vector<NerveFiber> fibers;  // in nerve tuple order
};

// per-tuple homological field: the fiberwise differential in the basis of the
// nerve fiber; level 0 is the side algebroid differential
struct LiftedField {
    std::uint32_t level = 0;
    std::vector<DerivationSpec> fields;
};

// Caches tuples, fiber bases, induced algebras, lifted fields and face data
// per level. Levels are built on first request; the groupoid data is copied
// in so the cache owns everything it points at.
class LANerve {
public:
    explicit LANerve(LAGroupoid l);

    const LAGroupoid& data() const { return la_; }
    const NerveAlgebroid& level(std::uint32_t q);
    const LiftedField& lifted(std::uint32_t q);

    std::size_t tuple_index(std::uint32_t q, const ComposableTuple& t);

    // face σ_i on the tuple with index ti at level q: index of the image tuple
    // at level q-1, and the matrix of the face map in the two fiber bases
    std::size_t face_tuple(std::uint32_t q, std::uint32_t i, std::size_t ti);
    const SparseMatrix& face_matrix(std::uint32_t q, std::uint32_t i, std::size_t ti);

    // degeneracy Δ_i (unit insertion) on the tuple with index ti at level q:
    // image tuple index at level q+1 and its matrix in the fiber bases
    std::size_t degeneracy_tuple(std::uint32_t q, std::uint32_t i, std::size_t ti);
    SparseMatrix degeneracy_matrix(std::uint32_t q, std::uint32_t i, std::size_t ti);

private:
    LAGroupoid la_;
    // deques: ensure_level appends while references to built levels stay valid
    std::deque<NerveAlgebroid> levels_;
    std::deque<LiftedField> lifted_;
    std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> index_;  // arrows -> tuple idx
    std::map<std::uint32_t, std::size_t> object_index_;
    // face_[q][i][ti] built per (q, i) on demand
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<SparseMatrix>> face_;

    void ensure_level(std::uint32_t q);
    void ensure_faces(std::uint32_t q, std::uint32_t i);
    SparseMatrix face_ambient(std::uint32_t q, std::uint32_t i, const ComposableTuple& t);
};

NerveAlgebroid nerve_algebroid(const LAGroupoid& l, std::uint32_t q);
LiftedField lifted_differential(const LAGroupoid& l, std::uint32_t q);
// matrices of σ_i per level-q tuple, in the cached fiber bases
std::vector<SparseMatrix> nerve_face_linear(const LAGroupoid& l, std::uint32_t q, std::uint32_t i);
// matrices of Δ_i per level-q tuple (test surface for the unit-insertion laws)
std::vector<SparseMatrix> nerve_degeneracy_linear(const LAGroupoid& l, std::uint32_t q,
                                                  std::uint32_t i);

struct RelatednessCheckResult {
    bool ok = false;
    std::string context;   // which face/tuple failed
    std::string residue;   // the nonzero defect, printed
    explicit operator bool() const { return ok; }
};

// Verifies on generators that the level-1 field is src-/tgt-related to the
// level-0 field and that the level-2 field is related to level 1 along all
// three faces. The level-q fields for q > 2 are covered by the property
// tests, not by this check.
RelatednessCheckResult check_multiplicative(const LAGroupoid& l);

// single related-ness check along face i at level q, for the property suite
RelatednessCheckResult check_face_relatedness(LANerve& nerve, std::uint32_t q, std::uint32_t i);

}  // namespace laq
