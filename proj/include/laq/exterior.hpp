#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laq/sparse_matrix.hpp"

namespace laq {

// A frame of odd degree-one coordinates. Functions on the shifted model of an
// n-dimensional fiber form the exterior algebra on n anticommuting generators,
// so two frames are interchangeable exactly when their generator counts agree.
struct ExteriorFrame {
    std::uint32_t generators = 0;
    friend bool operator==(const ExteriorFrame&, const ExteriorFrame&) = default;
};

// Product of distinct generators in increasing order; the empty monomial is
// the unit. Ordering is degree-then-lexicographic, which fixes the basis
// order used for all matrix coordinates.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> indices);  // must be strictly increasing

    std::uint32_t degree() const { return static_cast<std::uint32_t>(indices_.size()); }
    const std::vector<std::uint32_t>& indices() const { return indices_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.indices_ == b.indices_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> indices_;
};

std::string to_string(const Monomial& m);  // e.g. "xi1^xi3", "1" for the unit

// all degree-p monomials on n generators, in basis order
std::vector<Monomial> exterior_basis(std::uint32_t n, std::uint32_t p);

// Finite formal sum of monomials with rational coefficients.
class Element {
public:
    explicit Element(ExteriorFrame frame) : frame_(frame) {}
    Element(ExteriorFrame frame, std::map<Monomial, Rational> terms);

    static Element zero(ExteriorFrame frame) { return Element(frame); }
    static Element unit(ExteriorFrame frame);
    static Element generator(ExteriorFrame frame, std::uint32_t i);

    ExteriorFrame frame() const { return frame_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational term(const Monomial& m) const;

    // degree when homogeneous, nullopt otherwise (zero counts as homogeneous
    // of any degree and reports nullopt)
    std::optional<std::uint32_t> degree() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Rational& s, const Element& a);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    ExteriorFrame frame_;
    std::map<Monomial, Rational> terms_;  // zero coefficients are never stored

    void add_term(const Monomial& m, const Rational& c);
    friend Element wedge(const Element& a, const Element& b);
};

// exterior product with the sign rule xi_i xi_j = -xi_j xi_i
Element wedge(const Element& a, const Element& b);

std::string to_string(const Element& e);

// Derivation of fixed degree, determined by its values on the generators.
// images[i] is the image of generator i; each must be homogeneous of degree
// 1 + degree (or zero).
struct DerivationSpec {
    ExteriorFrame frame;
    std::int32_t degree = 1;
    std::vector<Element> images;
};

// validates shape and homogeneity; throws on violation
void check_derivation(const DerivationSpec& d);

// graded Leibniz extension of d to an arbitrary element
Element apply_derivation(const DerivationSpec& d, const Element& x);

// graded commutator [d1, d2] = d1 d2 - (-1)^{|d1||d2|} d2 d1 on generators
DerivationSpec bracket(const DerivationSpec& d1, const DerivationSpec& d2);

struct HomologicalResult {
    bool ok = false;
    // first generator whose second image is nonzero, with the residue
    std::optional<std::uint32_t> generator;
    std::optional<Element> residue;
    explicit operator bool() const { return ok; }
};

// d of degree +1 squares to zero iff it does so on every generator
HomologicalResult is_homological(const DerivationSpec& d);

// Substitute generators: generator j of the (rows·)-generator frame is sent to
// the linear combination given by row j of L, then extended multiplicatively.
// Models the pullback of functions along the linear map with matrix L read as
// a map from the L.cols()-dim fiber to the L.rows()-dim fiber.
Element substitute(const SparseMatrix& L, const Element& x);

// matrix of substitute(L, ·) from degree-p monomials on L.rows() generators to
// degree-p monomials on L.cols() generators, in basis order
SparseMatrix exterior_pullback(std::uint32_t p, const SparseMatrix& L);

// matrix of a degree +1 derivation from the degree-p to the degree-(p+1)
// monomial basis
SparseMatrix derivation_matrix(const DerivationSpec& d, std::uint32_t p);

}  // namespace laq
