#include "laq/groupoid.hpp"

#include <algorithm>

#include "laq/errors.hpp"

namespace laq {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> labels, const char* what) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw MalformedInput(std::string("duplicate ") + what + " label");
    return labels;
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<ArrowSpec> arrows,
                               const std::vector<std::array<std::string, 3>>& mult,
                               const std::vector<std::pair<std::string, std::string>>& units,
                               const std::vector<std::pair<std::string, std::string>>& inverses)
    : objects_(sorted_unique(std::move(objects), "object")) {
    std::sort(arrows.begin(), arrows.end(),
              [](const ArrowSpec& a, const ArrowSpec& b) { return a.label < b.label; });
    for (std::size_t i = 1; i < arrows.size(); ++i)
        if (arrows[i - 1].label == arrows[i].label)
            throw MalformedInput("duplicate arrow label '" + arrows[i].label + "'");

    const auto obj = [&](const std::string& label) {
        auto it = std::lower_bound(objects_.begin(), objects_.end(), label);
        if (it == objects_.end() || *it != label)
            throw MalformedInput("unknown object label '" + label + "'");
        return static_cast<std::uint32_t>(it - objects_.begin());
    };

    arrows_.reserve(arrows.size());
    for (const auto& a : arrows) arrows_.push_back(a.label);
    const auto arr = [&](const std::string& label) {
        auto it = std::lower_bound(arrows_.begin(), arrows_.end(), label);
        if (it == arrows_.end() || *it != label)
            throw MalformedInput("unknown arrow label '" + label + "'");
        return static_cast<std::uint32_t>(it - arrows_.begin());
    };

    src_.reserve(arrows.size());
    tgt_.reserve(arrows.size());
    for (const auto& a : arrows) {
        src_.push_back(obj(a.src));
        tgt_.push_back(obj(a.tgt));
    }

    for (const auto& [g, h, gh] : mult) {
        auto key = std::make_pair(arr(g), arr(h));
        auto [it, inserted] = mult_.emplace(key, arr(gh));
        if (!inserted && it->second != arr(gh))
            throw MalformedInput("conflicting multiplication entries for (" + g + ", " + h + ")");
    }

    unit_.assign(objects_.size(), npos);
    for (const auto& [x, u] : units) {
        const std::uint32_t xi = obj(x);
        const std::uint32_t ui = arr(u);
        if (unit_[xi] != npos && unit_[xi] != ui)
            throw MalformedInput("conflicting unit entries for object '" + x + "'");
        unit_[xi] = ui;
    }

    inv_.assign(arrows_.size(), npos);
    for (const auto& [g, gi] : inverses) {
        const std::uint32_t a = arr(g);
        const std::uint32_t b = arr(gi);
        if (inv_[a] != npos && inv_[a] != b)
            throw MalformedInput("conflicting inverse entries for arrow '" + g + "'");
        inv_[a] = b;
    }

    by_tgt_.assign(objects_.size(), {});
    for (std::uint32_t g = 0; g < arrows_.size(); ++g) by_tgt_[tgt_[g]].push_back(g);
}

std::optional<std::uint32_t> FiniteGroupoid::object_index(const std::string& label) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), label);
    if (it == objects_.end() || *it != label) return std::nullopt;
    return static_cast<std::uint32_t>(it - objects_.begin());
}

std::optional<std::uint32_t> FiniteGroupoid::arrow_index(const std::string& label) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), label);
    if (it == arrows_.end() || *it != label) return std::nullopt;
    return static_cast<std::uint32_t>(it - arrows_.begin());
}

bool FiniteGroupoid::composable(std::uint32_t g, std::uint32_t h) const {
    return src(g) == tgt(h);
}

std::optional<std::uint32_t> FiniteGroupoid::mult(std::uint32_t g, std::uint32_t h) const {
    if (g >= arrows_.size() || h >= arrows_.size())
        throw IndexOutOfRange("arrow index outside groupoid");
    auto it = mult_.find({g, h});
    if (it == mult_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t FiniteGroupoid::mult_or_throw(std::uint32_t g, std::uint32_t h) const {
    auto m = mult(g, h);
    if (!m)
        throw MalformedInput("product undefined for (" + arrows_[g] + ", " + arrows_[h] + ")");
    return *m;
}

std::uint32_t FiniteGroupoid::unit(std::uint32_t x) const {
    if (x >= objects_.size()) throw IndexOutOfRange("object index outside groupoid");
    if (unit_[x] == npos) throw MalformedInput("no unit arrow over object '" + objects_[x] + "'");
    return unit_[x];
}

std::uint32_t FiniteGroupoid::inv(std::uint32_t g) const {
    if (g >= arrows_.size()) throw IndexOutOfRange("arrow index outside groupoid");
    if (inv_[g] == npos) throw MalformedInput("no inverse for arrow '" + arrows_[g] + "'");
    return inv_[g];
}

std::string to_string(const FiniteGroupoid& g, const ComposableTuple& t) {
    if (t.level == 0) return "[" + g.object_label(t.object) + "]";
    std::string s = "(";
    for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        if (i) s += ", ";
        s += g.arrow_label(t.arrows[i]);
    }
    return s + ")";
}

GroupoidCheckResult validate_groupoid(const FiniteGroupoid& g) {
    const std::size_t n = g.arrow_count();

    // mult defined exactly on composable pairs, with the right source/target
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            const auto m = g.mult(a, b);
            if (g.composable(a, b) != m.has_value())
                return {false, "composability",
                        "(" + g.arrow_label(a) + ", " + g.arrow_label(b) +
                            (m ? ") multiplied although not composable"
                               : ") composable but product undefined")};
            if (m && (g.src(*m) != g.src(b) || g.tgt(*m) != g.tgt(a)))
                return {false, "composability",
                        "product " + g.arrow_label(*m) + " of (" + g.arrow_label(a) + ", " +
                            g.arrow_label(b) + ") has wrong endpoints"};
        }

    // units exist over every object and are two-sided identities
    for (std::uint32_t x = 0; x < g.object_count(); ++x) {
        if (!g.has_unit(x)) return {false, "unit", "object " + g.object_label(x) + " has no unit"};
        const std::uint32_t u = g.unit(x);
        if (g.src(u) != x || g.tgt(u) != x)
            return {false, "unit", "unit of " + g.object_label(x) + " is not an endo-arrow"};
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        const std::uint32_t us = g.unit(g.src(a));
        const std::uint32_t ut = g.unit(g.tgt(a));
        if (g.mult(a, us) != std::optional<std::uint32_t>(a))
            return {false, "unit", g.arrow_label(a) + " · unit(src) ≠ " + g.arrow_label(a)};
        if (g.mult(ut, a) != std::optional<std::uint32_t>(a))
            return {false, "unit", "unit(tgt) · " + g.arrow_label(a) + " ≠ " + g.arrow_label(a)};
    }

    // inverse laws
    for (std::uint32_t a = 0; a < n; ++a) {
        if (!g.has_inv(a))
            return {false, "inverse", "arrow " + g.arrow_label(a) + " has no inverse"};
        const std::uint32_t b = g.inv(a);
        if (g.src(b) != g.tgt(a) || g.tgt(b) != g.src(a))
            return {false, "inverse",
                    "inverse of " + g.arrow_label(a) + " has wrong endpoints"};
        if (g.mult(a, b) != std::optional<std::uint32_t>(g.unit(g.tgt(a))))
            return {false, "inverse",
                    g.arrow_label(a) + " · " + g.arrow_label(b) + " ≠ unit(tgt)"};
        if (g.mult(b, a) != std::optional<std::uint32_t>(g.unit(g.src(a))))
            return {false, "inverse",
                    g.arrow_label(b) + " · " + g.arrow_label(a) + " ≠ unit(src)"};
    }

    // associativity on all composable triples
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if (!g.composable(a, b)) continue;
            for (std::uint32_t c = 0; c < n; ++c) {
                if (!g.composable(b, c)) continue;
                const std::uint32_t ab = *g.mult(a, b);
                const std::uint32_t bc = *g.mult(b, c);
                if (g.mult(ab, c) != g.mult(a, bc))
                    return {false, "associativity",
                            "(" + g.arrow_label(a) + " · " + g.arrow_label(b) + ") · " +
                                g.arrow_label(c) + " ≠ " + g.arrow_label(a) + " · (" +
                                g.arrow_label(b) + " · " + g.arrow_label(c) + ")"};
            }
        }

    return {true, "", ""};
}

std::vector<ComposableTuple> nerve(const FiniteGroupoid& g, std::uint32_t q) {
    std::vector<ComposableTuple> out;
    if (q == 0) {
        for (std::uint32_t x = 0; x < g.object_count(); ++x)
            out.push_back(ComposableTuple{0, x, {}});
        return out;
    }
    // depth-first, smallest arrow first at every slot: lexicographic order
    std::vector<std::uint32_t> stack;
    const std::size_t n = g.arrow_count();
    std::function<void()> extend = [&]() {
        if (stack.size() == q) {
            out.push_back(ComposableTuple{q, 0, stack});
            return;
        }
        if (stack.empty()) {
            for (std::uint32_t a = 0; a < n; ++a) {
                stack.push_back(a);
                extend();
                stack.pop_back();
            }
        } else {
            for (std::uint32_t a : g.arrows_into(g.src(stack.back()))) {
                stack.push_back(a);
                extend();
                stack.pop_back();
            }
        }
    };
    extend();
    return out;
}

ComposableTuple face(const FiniteGroupoid& g, std::uint32_t q, std::uint32_t i,
                     const ComposableTuple& t) {
    if (q < 1 || t.level != q || t.arrows.size() != q)
        throw DegreeMismatch("face requires a level-q tuple with q >= 1");
    if (i > q) throw IndexOutOfRange("face index exceeds level");
    if (q == 1) {
        const std::uint32_t a = t.arrows[0];
        return ComposableTuple{0, i == 0 ? g.src(a) : g.tgt(a), {}};
    }
    ComposableTuple out{q - 1, 0, {}};
    if (i == 0) {
        out.arrows.assign(t.arrows.begin() + 1, t.arrows.end());
    } else if (i == q) {
        out.arrows.assign(t.arrows.begin(), t.arrows.end() - 1);
    } else {
        out.arrows.assign(t.arrows.begin(), t.arrows.end());
        const std::uint32_t prod = g.mult_or_throw(out.arrows[i - 1], out.arrows[i]);
        out.arrows[i - 1] = prod;
        out.arrows.erase(out.arrows.begin() + i);
    }
    return out;
}

ComposableTuple degeneracy(const FiniteGroupoid& g, std::uint32_t q, std::uint32_t i,
                           const ComposableTuple& t) {
    if (t.level != q || (q >= 1 && t.arrows.size() != q))
        throw DegreeMismatch("degeneracy requires a level-q tuple");
    if (i > q) throw IndexOutOfRange("degeneracy index exceeds level");
    if (q == 0) return ComposableTuple{1, 0, {g.unit(t.object)}};
    ComposableTuple out{q + 1, 0, t.arrows};
    const std::uint32_t u =
        i == 0 ? g.unit(g.tgt(t.arrows[0])) : g.unit(g.src(t.arrows[i - 1]));
    out.arrows.insert(out.arrows.begin() + i, u);
    return out;
}

SimplicialCheckResult check_simplicial_identities(const FiniteGroupoid& g, std::uint32_t q_max) {
    return check_simplicial_identities(g, q_max, FaceFn(face));
}

SimplicialCheckResult check_simplicial_identities(const FiniteGroupoid& g, std::uint32_t q_max,
                                                  const FaceFn& face_fn) {
    for (std::uint32_t q = 2; q <= q_max; ++q) {
        for (const ComposableTuple& t : nerve(g, q)) {
            for (std::uint32_t j = 1; j <= q; ++j)
                for (std::uint32_t i = 0; i < j; ++i) {
                    const ComposableTuple lhs = face_fn(g, q - 1, i, face_fn(g, q, j, t));
                    const ComposableTuple rhs = face_fn(g, q - 1, j - 1, face_fn(g, q, i, t));
                    if (!(lhs == rhs))
                        return {false,
                                "sigma_" + std::to_string(i) + " sigma_" + std::to_string(j) +
                                    " at level " + std::to_string(q),
                                to_string(g, t)};
                }
        }
    }
    return {true, "", ""};
}

FiniteGroupoid group_groupoid(const std::string& object, const std::vector<std::string>& elements,
                              const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = elements.size();
    if (n == 0) throw EmptySet("group table is empty");
    if (table.size() != n) throw MalformedInput("group table row count mismatch");
    for (const auto& row : table) {
        if (row.size() != n) throw MalformedInput("group table column count mismatch");
        for (std::size_t v : row)
            if (v >= n) throw MalformedInput("group table entry outside element range");
    }

    // locate the two-sided identity
    std::size_t unit = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = table[e][i] == i && table[i][e] == i;
        if (ok) {
            unit = e;
            break;
        }
    }
    if (unit == n) throw MalformedInput("group table has no identity element");

    std::vector<FiniteGroupoid::ArrowSpec> arrows;
    for (const auto& e : elements) arrows.push_back({e, object, object});
    std::vector<std::array<std::string, 3>> mult;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mult.push_back({elements[i], elements[j], elements[table[i][j]]});

    std::vector<std::pair<std::string, std::string>> inverses;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t inv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] == unit && table[j][i] == unit) {
                inv = j;
                break;
            }
        if (inv == n) throw MalformedInput("group table element without inverse");
        inverses.emplace_back(elements[i], elements[inv]);
    }

    return FiniteGroupoid({object}, std::move(arrows), mult, {{object, elements[unit]}},
                          inverses);
}

FiniteGroupoid pair_groupoid(const std::vector<std::string>& points) {
    if (points.empty()) throw EmptySet("pair groupoid needs at least one point");
    const auto arrow_label = [](const std::string& from, const std::string& to) {
        return from + "->" + to;
    };
    std::vector<FiniteGroupoid::ArrowSpec> arrows;
    std::vector<std::array<std::string, 3>> mult;
    std::vector<std::pair<std::string, std::string>> units, inverses;
    for (const auto& u : points)
        for (const auto& v : points) {
            arrows.push_back({arrow_label(u, v), u, v});
            inverses.emplace_back(arrow_label(u, v), arrow_label(v, u));
        }
    for (const auto& u : points) units.emplace_back(u, arrow_label(u, u));
    // g: x -> z composes with h: w -> x to g∘h: w -> z
    for (const auto& x : points)
        for (const auto& z : points)
            for (const auto& w : points)
                mult.push_back({arrow_label(x, z), arrow_label(w, x), arrow_label(w, z)});
    return FiniteGroupoid(points, std::move(arrows), mult, units, inverses);
}

FiniteGroupoid identity_groupoid(const std::vector<std::string>& points) {
    if (points.empty()) throw EmptySet("identity groupoid needs at least one point");
    std::vector<FiniteGroupoid::ArrowSpec> arrows;
    std::vector<std::array<std::string, 3>> mult;
    std::vector<std::pair<std::string, std::string>> units, inverses;
    for (const auto& x : points) {
        arrows.push_back({x, x, x});
        mult.push_back({x, x, x});
        units.emplace_back(x, x);
        inverses.emplace_back(x, x);
    }
    return FiniteGroupoid(points, std::move(arrows), mult, units, inverses);
}

}  // namespace laq
