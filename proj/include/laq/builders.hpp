#pragma once

#include <string>
#include <vector>

#include "laq/double_complex.hpp"
#include "laq/la_groupoid.hpp"

namespace laq {

// A groupoid acting on a bundle of Lie algebras. The acting groupoid's
// objects are the base points of the bundle (the action groupoid encoding:
// an arrow g moves the point src(g) to the point tgt(g)). lifts[g] is the
// transport A_{src(g)} → A_{tgt(g)}; transports must be functorial
// (lift(g∘h) = lift(g)·lift(h), lift(unit) = id) and fiberwise Lie algebra
// morphisms, which together make each of them an isomorphism.
struct GroupActionOnBundle {
    FiniteGroupoid group;
    std::vector<LinearLieMorphism> lifts;  // indexed like group arrows
};

// checks the invariants above against the bundle; witness names the arrow
LACheckResult validate_action(const GroupActionOnBundle& action, const LieFiberBundle& a);

// zero bundles over a groupoid; the double complex is its bar complex
LAGroupoid trivial_groupoid(const FiniteGroupoid& g);

// identity groupoid under a bundle; Ω = A and every structure map is the
// identity, so the double complex is the fiberwise cochain complex
LAGroupoid trivial_algebroid(const LieFiberBundle& a);

// Action groupoid over the bundle: base = action.group, Ω over an arrow g is
// A_{src(g)}, s̃ = id, t̃ = lift(g), m̃(v, w) = w. With the trivial group this
// reproduces trivial_algebroid exactly. Throws ActionInvalid.
LAGroupoid equivariant(const LieFiberBundle& a, const GroupActionOnBundle& action);

// Same structure for a matched pair: g must be the acting groupoid itself.
// (The complementary algebroid action vanishes over a finite base, so none is
// taken.) Throws ActionInvalid.
LAGroupoid vacant_matched_pair(const FiniteGroupoid& g, const LieFiberBundle& a,
                               const GroupActionOnBundle& action);

// pair groupoid with zero bundles; throws EmptySet
LAGroupoid pair_zero(const std::vector<std::string>& points);

// componentwise product; labels are "(left,right)" pairs, fibers direct sums
LAGroupoid product(const LAGroupoid& l1, const LAGroupoid& l2);

// Blockwise action of generator arrows on an assembled complex, for
// invariant_subcomplex. A unit arrow acts as the identity; any other
// generator needs a one-object base with s̃ = id everywhere (the
// equivariant/vacant shape) and acts by conjugating tuples and transporting
// fibers along lift(a⁻¹) = tgt_lin[inv(a)]. Throws ActionNotCompatible when a
// generator is outside that scope.
ComplexAction complex_action(LANerve& nerve, const DoubleComplex& c,
                             const std::vector<std::string>& generator_arrows);

}  // namespace laq
