#include "laq/exterior.hpp"

#include <algorithm>

#include "laq/errors.hpp"

namespace laq {

Monomial::Monomial(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 1; i < indices_.size(); ++i)
        if (indices_[i - 1] >= indices_[i])
            throw MalformedInput("monomial indices must be strictly increasing");
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.indices_ <=> b.indices_;
}

std::string to_string(const Monomial& m) {
    if (m.degree() == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.indices().size(); ++i) {
        if (i) s += "^";
        s += "xi" + std::to_string(m.indices()[i] + 1);
    }
    return s;
}

std::vector<Monomial> exterior_basis(std::uint32_t n, std::uint32_t p) {
    std::vector<Monomial> out;
    if (p > n) return out;
    std::vector<std::uint32_t> idx(p);
    for (std::uint32_t i = 0; i < p; ++i) idx[i] = i;
    while (true) {
        out.emplace_back(idx);
        // advance to the next increasing p-subset of {0, ..., n-1}
        std::size_t k = p;
        while (k > 0 && idx[k - 1] == n - p + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

// merge two increasing index lists; sign from the parity of transpositions,
// zero (nullopt) when an index repeats
std::optional<std::pair<Monomial, int>> merge_monomials(const Monomial& a, const Monomial& b) {
    const auto& x = a.indices();
    const auto& y = b.indices();
    std::vector<std::uint32_t> merged;
    merged.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    std::size_t inversions = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return std::nullopt;
        if (x[i] < y[j]) {
            merged.push_back(x[i++]);
        } else {
            merged.push_back(y[j++]);
            inversions += x.size() - i;  // y[j] jumps over the rest of x
        }
    }
    while (i < x.size()) merged.push_back(x[i++]);
    while (j < y.size()) merged.push_back(y[j++]);
    return std::make_pair(Monomial(std::move(merged)), inversions % 2 == 0 ? 1 : -1);
}

}  // namespace

Element::Element(ExteriorFrame frame, std::map<Monomial, Rational> terms)
    : frame_(frame), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!it->first.indices().empty() && it->first.indices().back() >= frame_.generators)
            throw IndexOutOfRange("monomial index outside frame");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Element Element::unit(ExteriorFrame frame) {
    Element e(frame);
    e.terms_.emplace(Monomial{}, Rational(1));
    return e;
}

Element Element::generator(ExteriorFrame frame, std::uint32_t i) {
    if (i >= frame.generators) throw IndexOutOfRange("generator index outside frame");
    Element e(frame);
    e.terms_.emplace(Monomial({i}), Rational(1));
    return e;
}

Rational Element::term(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint32_t> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    const std::uint32_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element out(frame_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element operator+(const Element& a, const Element& b) {
    if (a.frame() != b.frame()) throw FrameMismatch("frames differ in addition");
    Element out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Element operator-(const Element& a, const Element& b) {
    if (a.frame() != b.frame()) throw FrameMismatch("frames differ in subtraction");
    Element out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

Element operator*(const Rational& s, const Element& a) {
    Element out(a.frame());
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
    return out;
}

bool operator==(const Element& a, const Element& b) {
    return a.frame_ == b.frame_ && a.terms_ == b.terms_;
}

Element wedge(const Element& a, const Element& b) {
    if (a.frame() != b.frame()) throw FrameMismatch("frames differ in wedge");
    Element out(a.frame());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto merged = merge_monomials(ma, mb);
            if (!merged) continue;
            out.add_term(merged->first, ca * cb * merged->second);
        }
    }
    return out;
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : e.terms()) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1 || m.degree() == 0) {
            s += to_string(a);
            if (m.degree() > 0) s += " ";
        }
        if (m.degree() > 0) s += to_string(m);
    }
    return s;
}

void check_derivation(const DerivationSpec& d) {
    if (d.images.size() != d.frame.generators)
        throw FrameMismatch("derivation must assign one image per generator");
    for (std::uint32_t i = 0; i < d.images.size(); ++i) {
        const Element& img = d.images[i];
        if (img.frame() != d.frame) throw FrameMismatch("derivation image in wrong frame");
        if (img.is_zero()) continue;
        const auto deg = img.degree();
        const std::int32_t want = 1 + d.degree;
        if (!deg || want < 0 || static_cast<std::int32_t>(*deg) != want)
            throw DegreeMismatch("derivation image of generator " + std::to_string(i + 1) +
                                 " is not homogeneous of degree " + std::to_string(want));
    }
}

Element apply_derivation(const DerivationSpec& d, const Element& x) {
    check_derivation(d);
    if (x.frame() != d.frame) throw FrameMismatch("element frame differs from derivation frame");
    const bool odd = (d.degree % 2) != 0;
    Element out(d.frame);
    for (const auto& [m, c] : x.terms()) {
        const auto& idx = m.indices();
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const Element& img = d.images[idx[k]];
            if (img.is_zero()) continue;
            // sign: d crosses the k leading generators
            const Rational sign = (odd && (k % 2 == 1)) ? Rational(-1) : Rational(1);
            std::vector<std::uint32_t> pre(idx.begin(), idx.begin() + k);
            std::vector<std::uint32_t> post(idx.begin() + k + 1, idx.end());
            Element left(d.frame, {{Monomial(std::move(pre)), c * sign}});
            Element right(d.frame, {{Monomial(std::move(post)), Rational(1)}});
            out = out + wedge(wedge(left, img), right);
        }
    }
    return out;
}

DerivationSpec bracket(const DerivationSpec& d1, const DerivationSpec& d2) {
    check_derivation(d1);
    check_derivation(d2);
    if (d1.frame != d2.frame) throw FrameMismatch("derivation frames differ in bracket");
    const bool both_odd = (d1.degree % 2 != 0) && (d2.degree % 2 != 0);
    DerivationSpec out{d1.frame, d1.degree + d2.degree, {}};
    for (std::uint32_t i = 0; i < d1.frame.generators; ++i) {
        const Element gen = Element::generator(d1.frame, i);
        Element v = apply_derivation(d1, apply_derivation(d2, gen));
        Element w = apply_derivation(d2, apply_derivation(d1, gen));
        out.images.push_back(both_odd ? v + w : v - w);
    }
    return out;
}

HomologicalResult is_homological(const DerivationSpec& d) {
    check_derivation(d);
    if (d.degree % 2 == 0)
        throw DegreeMismatch("squaring test requires an odd-degree derivation");
    for (std::uint32_t i = 0; i < d.frame.generators; ++i) {
        Element r = apply_derivation(d, d.images[i]);
        if (!r.is_zero()) return {false, i, std::move(r)};
    }
    return {true, std::nullopt, std::nullopt};
}

Element substitute(const SparseMatrix& L, const Element& x) {
    if (x.frame().generators != L.rows())
        throw FrameMismatch("element frame does not match matrix row count");
    const ExteriorFrame target{static_cast<std::uint32_t>(L.cols())};
    std::vector<Element> row_image;
    row_image.reserve(L.rows());
    for (std::size_t j = 0; j < L.rows(); ++j) {
        Element e(target);
        for (const auto& [i, v] : L.row_entries(j))
            e = e + v * Element::generator(target, static_cast<std::uint32_t>(i));
        row_image.push_back(std::move(e));
    }
    Element out(target);
    for (const auto& [m, c] : x.terms()) {
        Element prod = c * Element::unit(target);
        for (std::uint32_t j : m.indices()) {
            prod = wedge(prod, row_image[j]);
            if (prod.is_zero()) break;
        }
        out = out + prod;
    }
    return out;
}

SparseMatrix derivation_matrix(const DerivationSpec& d, std::uint32_t p) {
    check_derivation(d);
    if (d.degree != 1) throw DegreeMismatch("derivation_matrix expects a degree +1 derivation");
    const std::uint32_t n = d.frame.generators;
    const auto src = exterior_basis(n, p);
    const auto dst = exterior_basis(n, p + 1);
    std::map<Monomial, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);

    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t c = 0; c < src.size(); ++c) {
        Element img = apply_derivation(d, Element(d.frame, {{src[c], Rational(1)}}));
        for (const auto& [m, v] : img.terms()) ts.push_back({index.at(m), c, v});
    }
    return SparseMatrix(dst.size(), src.size(), ts);
}

SparseMatrix exterior_pullback(std::uint32_t p, const SparseMatrix& L) {
    const auto source_basis = exterior_basis(static_cast<std::uint32_t>(L.rows()), p);
    const auto target_basis = exterior_basis(static_cast<std::uint32_t>(L.cols()), p);
    std::map<Monomial, std::size_t> index;
    for (std::size_t r = 0; r < target_basis.size(); ++r) index.emplace(target_basis[r], r);

    const ExteriorFrame source_frame{static_cast<std::uint32_t>(L.rows())};
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t c = 0; c < source_basis.size(); ++c) {
        Element img = substitute(L, Element(source_frame, {{source_basis[c], Rational(1)}}));
        for (const auto& [m, v] : img.terms()) ts.push_back({index.at(m), c, v});
    }
    return SparseMatrix(target_basis.size(), source_basis.size(), ts);
}

}  // namespace laq
