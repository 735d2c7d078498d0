#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace laq {

// Finite groupoid with explicit multiplication table. Objects and arrows are
// opaque string labels, sorted at construction so every enumeration (and thus
// every matrix layout downstream) is reproducible. Construction checks only
// referential integrity; validate_groupoid checks the axioms.
class FiniteGroupoid {
public:
    struct ArrowSpec {
        std::string label;
        std::string src;
        std::string tgt;
    };

    static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

    FiniteGroupoid(std::vector<std::string> objects, std::vector<ArrowSpec> arrows,
                   const std::vector<std::array<std::string, 3>>& mult,  // [g, h, g∘h]
                   const std::vector<std::pair<std::string, std::string>>& units,
                   const std::vector<std::pair<std::string, std::string>>& inverses);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& object_label(std::uint32_t x) const { return objects_.at(x); }
    const std::string& arrow_label(std::uint32_t g) const { return arrows_.at(g); }
    std::optional<std::uint32_t> object_index(const std::string& label) const;
    std::optional<std::uint32_t> arrow_index(const std::string& label) const;

    std::uint32_t src(std::uint32_t g) const { return src_.at(g); }
    std::uint32_t tgt(std::uint32_t g) const { return tgt_.at(g); }

    // src(g) = tgt(h), i.e. the product g∘h may be formed
    bool composable(std::uint32_t g, std::uint32_t h) const;
    // table entry for g∘h as stored, which for an unvalidated groupoid may be
    // absent even on a composable pair
    std::optional<std::uint32_t> mult(std::uint32_t g, std::uint32_t h) const;
    std::uint32_t mult_or_throw(std::uint32_t g, std::uint32_t h) const;

    bool has_unit(std::uint32_t x) const { return unit_.at(x) != npos; }
    std::uint32_t unit(std::uint32_t x) const;
    bool has_inv(std::uint32_t g) const { return inv_.at(g) != npos; }
    std::uint32_t inv(std::uint32_t g) const;

    // arrows h with tgt(h) = x, ascending; drives nerve enumeration
    const std::vector<std::uint32_t>& arrows_into(std::uint32_t x) const { return by_tgt_.at(x); }

    const std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>& mult_table() const {
        return mult_;
    }

    friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;

private:
    std::vector<std::string> objects_;  // sorted
    std::vector<std::string> arrows_;   // sorted
    std::vector<std::uint32_t> src_, tgt_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mult_;
    std::vector<std::uint32_t> unit_;  // per object, npos when absent
    std::vector<std::uint32_t> inv_;   // per arrow, npos when absent
    std::vector<std::vector<std::uint32_t>> by_tgt_;
};

// Level-q point of the nerve: q composable arrows with src(g_i) = tgt(g_{i+1});
// a level-0 point is an object.
struct ComposableTuple {
    std::uint32_t level = 0;
    std::uint32_t object = 0;             // meaningful iff level == 0
    std::vector<std::uint32_t> arrows;    // size == level

    friend bool operator==(const ComposableTuple&, const ComposableTuple&) = default;
};

std::string to_string(const FiniteGroupoid& g, const ComposableTuple& t);

struct GroupoidCheckResult {
    bool ok = false;
    std::string axiom;    // name of the first failing axiom, empty when ok
    std::string witness;  // offending elements, human readable
    explicit operator bool() const { return ok; }
};

// exhaustive check: mult defined exactly on composable pairs and lands in the
// right hom-set, associativity, unit laws, inverse laws
GroupoidCheckResult validate_groupoid(const FiniteGroupoid& g);

// all level-q tuples, ordered lexicographically by arrow label sequence
// (pre: validated groupoid)
std::vector<ComposableTuple> nerve(const FiniteGroupoid& g, std::uint32_t q);

// σ_i^q: drop-first (i = 0), multiply adjacent (0 < i < q), drop-last (i = q);
// at q = 1, σ_0 = src and σ_1 = tgt
ComposableTuple face(const FiniteGroupoid& g, std::uint32_t q, std::uint32_t i,
                     const ComposableTuple& t);

// Δ_i^q: insert the unit arrow at slot i (level q -> q+1)
ComposableTuple degeneracy(const FiniteGroupoid& g, std::uint32_t q, std::uint32_t i,
                           const ComposableTuple& t);

struct SimplicialCheckResult {
    bool ok = false;
    std::string identity;  // "sigma_i sigma_j" description of the failing pair
    std::string witness;
    explicit operator bool() const { return ok; }
};

// σ_i^{q-1} ∘ σ_j^q = σ_{j-1}^{q-1} ∘ σ_i^q for all i < j ≤ q ≤ q_max, on
// every tuple; the face map is injectable so tests can exercise mutations
using FaceFn = std::function<ComposableTuple(const FiniteGroupoid&, std::uint32_t, std::uint32_t,
                                             const ComposableTuple&)>;
SimplicialCheckResult check_simplicial_identities(const FiniteGroupoid& g, std::uint32_t q_max);
SimplicialCheckResult check_simplicial_identities(const FiniteGroupoid& g, std::uint32_t q_max,
                                                  const FaceFn& face_fn);

// one-object groupoid from a group table: elements[i]∘elements[j] = elements[table[i][j]];
// the unit element and inverses are located in the table
FiniteGroupoid group_groupoid(const std::string& object, const std::vector<std::string>& elements,
                              const std::vector<std::vector<std::size_t>>& table);

// exactly one arrow x -> y for each ordered pair; unit(x) = (x, x)
FiniteGroupoid pair_groupoid(const std::vector<std::string>& points);

// only unit arrows
FiniteGroupoid identity_groupoid(const std::vector<std::string>& points);

}  // namespace laq
