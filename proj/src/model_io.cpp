#include "laq/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "laq/errors.hpp"

namespace laq {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& field(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) fail(where + ": missing key \"" + key + "\"");
    return *it;
}

std::string string_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) fail(where + ": \"" + std::string(key) + "\" must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) fail(where + ": expected an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::uint32_t index_1based(const json& j, std::uint32_t dim, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        fail(where + ": indices must be integers");
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 1 || v > static_cast<std::int64_t>(dim))
        fail(where + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    return static_cast<std::uint32_t>(v - 1);
}

LieAlgebra parse_algebra(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where + ": expected an object with \"dim\" and \"brackets\"");
    const json& jd = field(j, "dim", where);
    if (!jd.is_number_integer() && !jd.is_number_unsigned())
        fail(where + ": \"dim\" must be a nonnegative integer");
    const std::int64_t d = jd.get<std::int64_t>();
    if (d < 0) fail(where + ": \"dim\" must be a nonnegative integer");
    const auto dim = static_cast<std::uint32_t>(d);

    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Rational>> entries;
    if (const auto it = j.find("brackets"); it != j.end()) {
        if (!it->is_array()) fail(where + ": \"brackets\" must be an array of [i, j, k, c]");
        for (const auto& row : *it) {
            if (!row.is_array() || row.size() != 4)
                fail(where + ": \"brackets\" entries must be [i, j, k, c]");
            const std::uint32_t i = index_1based(row[0], dim, where);
            const std::uint32_t jj = index_1based(row[1], dim, where);
            const std::uint32_t k = index_1based(row[2], dim, where);
            if (i >= jj) fail(where + ": bracket rows need i < j (saw i=" +
                              std::to_string(i + 1) + ", j=" + std::to_string(jj + 1) + ")");
            entries.emplace_back(i, jj, k, parse_rational_json(row[3]));
        }
    }
    return LieAlgebra(dim, entries);
}

// the acting groupoid plus one lift matrix per arrow, keyed by arrow label
GroupActionOnBundle parse_action(const FiniteGroupoid& g, const LieFiberBundle& a,
                                 const json& lifts) {
    if (!lifts.is_object()) fail("\"lifts\": expected an object keyed by arrow label");
    if (g.object_count() != a.base.size())
        fail("action groupoid has " + std::to_string(g.object_count()) +
             " objects but the bundle has " + std::to_string(a.base.size()) + " points");
    for (std::uint32_t x = 0; x < g.object_count(); ++x)
        if (g.object_label(x) != a.base[x])
            fail("action groupoid object \"" + g.object_label(x) +
                 "\" does not match bundle point \"" + a.base[x] + "\"");

    GroupActionOnBundle action{g, {}};
    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
        const std::string& label = g.arrow_label(i);
        const auto it = lifts.find(label);
        if (it == lifts.end()) fail("\"lifts\": no matrix for arrow \"" + label + "\"");
        const LieAlgebra& from = a.fibers[g.src(i)];
        const LieAlgebra& to = a.fibers[g.tgt(i)];
        action.lifts.push_back({from, to, parse_matrix(*it, to.dim(), from.dim())});
    }
    for (const auto& [key, value] : lifts.items()) {
        (void)value;
        if (!g.arrow_index(key)) fail("\"lifts\": unknown arrow \"" + key + "\"");
    }
    return action;
}

// keys of omega that are structure-map tables rather than arrow fibers
bool reserved_omega_key(const std::string& k) {
    return k == "source_maps" || k == "target_maps" || k == "mult_maps" ||
           k == "unit_maps" || k == "inverse_maps";
}

LAGroupoid parse_explicit(const json& j) {
    if (!j.is_object()) fail("\"explicit\": expected an object");
    const FiniteGroupoid base = parse_groupoid(j);
    LAGroupoid l{base};

    const json& jalg = field(j, "algebroid", "\"explicit\"");
    if (!jalg.is_object()) fail("\"algebroid\": expected an object keyed by point label");
    for (std::uint32_t x = 0; x < base.object_count(); ++x) {
        const auto it = jalg.find(base.object_label(x));
        if (it == jalg.end())
            fail("\"algebroid\": no fiber for point \"" + base.object_label(x) + "\"");
        l.side.base.push_back(base.object_label(x));
        l.side.fibers.push_back(parse_algebra(*it, "\"algebroid\"[\"" + base.object_label(x) + "\"]"));
    }
    for (const auto& [key, value] : jalg.items()) {
        (void)value;
        if (!base.object_index(key)) fail("\"algebroid\": unknown point \"" + key + "\"");
    }

    const json& jom = field(j, "omega", "\"explicit\"");
    if (!jom.is_object()) fail("\"omega\": expected an object");
    for (std::uint32_t g = 0; g < base.arrow_count(); ++g) {
        const auto it = jom.find(base.arrow_label(g));
        if (it == jom.end()) fail("\"omega\": no fiber for arrow \"" + base.arrow_label(g) + "\"");
        l.top.base.push_back(base.arrow_label(g));
        l.top.fibers.push_back(parse_algebra(*it, "\"omega\"[\"" + base.arrow_label(g) + "\"]"));
    }
    for (const auto& [key, value] : jom.items()) {
        (void)value;
        if (!reserved_omega_key(key) && !base.arrow_index(key))
            fail("\"omega\": unknown arrow \"" + key + "\"");
    }

    const auto omega_dim = [&](std::uint32_t g) { return l.top.fibers[g].dim(); };
    const auto side_dim = [&](std::uint32_t x) { return l.side.fibers[x].dim(); };

    const auto arrow_map_table = [&](const char* key, auto rows_of, auto cols_of,
                                     std::vector<SparseMatrix>& out) {
        const json& tbl = field(jom, key, "\"omega\"");
        if (!tbl.is_object()) fail(std::string("\"") + key + "\": expected an object keyed by arrow label");
        for (std::uint32_t g = 0; g < base.arrow_count(); ++g) {
            const auto it = tbl.find(base.arrow_label(g));
            if (it == tbl.end())
                fail(std::string("\"") + key + "\": no matrix for arrow \"" + base.arrow_label(g) + "\"");
            out.push_back(parse_matrix(*it, rows_of(g), cols_of(g)));
        }
        for (const auto& [k, v] : tbl.items()) {
            (void)v;
            if (!base.arrow_index(k)) fail(std::string("\"") + key + "\": unknown arrow \"" + k + "\"");
        }
    };

    arrow_map_table("source_maps", [&](std::uint32_t g) { return side_dim(base.src(g)); },
                    omega_dim, l.src_lin);
    arrow_map_table("target_maps", [&](std::uint32_t g) { return side_dim(base.tgt(g)); },
                    omega_dim, l.tgt_lin);
    arrow_map_table("inverse_maps",
                    [&](std::uint32_t g) { return base.has_inv(g) ? omega_dim(base.inv(g)) : 0; },
                    omega_dim, l.inv_lin);

    const json& junits = field(jom, "unit_maps", "\"omega\"");
    if (!junits.is_object()) fail("\"unit_maps\": expected an object keyed by point label");
    for (std::uint32_t x = 0; x < base.object_count(); ++x) {
        const auto it = junits.find(base.object_label(x));
        if (it == junits.end())
            fail("\"unit_maps\": no matrix for point \"" + base.object_label(x) + "\"");
        const std::size_t rows = base.has_unit(x) ? omega_dim(base.unit(x)) : 0;
        l.unit_lin.push_back(parse_matrix(*it, rows, side_dim(x)));
    }
    for (const auto& [k, v] : junits.items()) {
        (void)v;
        if (!base.object_index(k)) fail("\"unit_maps\": unknown point \"" + k + "\"");
    }

    const json& jmult = field(jom, "mult_maps", "\"omega\"");
    if (!jmult.is_array()) fail("\"mult_maps\": expected an array of [g, h, matrix]");
    for (const auto& row : jmult) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_string() || !row[1].is_string())
            fail("\"mult_maps\": entries must be [g, h, matrix]");
        const auto gi = base.arrow_index(row[0].get<std::string>());
        const auto hi = base.arrow_index(row[1].get<std::string>());
        if (!gi || !hi)
            fail("\"mult_maps\": unknown arrow in pair [" + row[0].get<std::string>() + ", " +
                 row[1].get<std::string>() + "]");
        const auto prod = base.mult(*gi, *hi);
        if (!prod)
            fail("\"mult_maps\": pair [" + row[0].get<std::string>() + ", " +
                 row[1].get<std::string>() + "] is not in the multiplication table");
        l.mult_lin[{*gi, *hi}] =
            parse_matrix(row[2], omega_dim(*prod), omega_dim(*gi) + omega_dim(*hi));
    }
    for (const auto& [pair, prod] : base.mult_table()) {
        (void)prod;
        if (!l.mult_lin.count(pair))
            fail("\"mult_maps\": no matrix for composable pair [" + base.arrow_label(pair.first) +
                 ", " + base.arrow_label(pair.second) + "]");
    }
    return l;
}

LAGroupoid build_node(const json& j);

LAGroupoid build_builder(const std::string& name, const json& j) {
    if (name == "trivial_groupoid") return trivial_groupoid(parse_groupoid(field(j, "groupoid", name)));
    if (name == "trivial_algebroid") return trivial_algebroid(parse_bundle(field(j, "algebroid", name)));
    if (name == "pair_zero") return pair_zero(string_array(field(j, "points", name), "\"points\""));
    if (name == "equivariant" || name == "vacant") {
        const FiniteGroupoid g = parse_groupoid(field(j, "groupoid", name));
        const LieFiberBundle a = parse_bundle(field(j, "algebroid", name));
        GroupActionOnBundle action = parse_action(g, a, field(j, "lifts", name));
        return name == "vacant" ? vacant_matched_pair(g, a, action) : equivariant(a, action);
    }
    if (name == "product")
        return product(build_node(field(j, "left", name)), build_node(field(j, "right", name)));
    fail("unknown builder \"" + name + "\"");
}

// a nested model object: builder or explicit form, format tag optional
LAGroupoid build_node(const json& j) {
    if (!j.is_object()) fail("model node: expected an object");
    if (const auto it = j.find("format"); it != j.end())
        if (!it->is_string() || it->get<std::string>() != "laq-v1")
            fail("model node: \"format\" must be \"laq-v1\"");
    const bool has_builder = j.contains("builder");
    const bool has_explicit = j.contains("explicit");
    if (has_builder == has_explicit)
        fail("model node: need exactly one of \"builder\" or \"explicit\"");
    if (has_explicit) return parse_explicit(j["explicit"]);
    const json& jb = j["builder"];
    if (!jb.is_string()) fail("\"builder\" must be a string");
    return build_builder(jb.get<std::string>(), j);
}

}  // namespace

Rational parse_rational_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Rational(Int(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("expected an integer or an \"a/b\" string, got " + j.dump());
}

SparseMatrix parse_matrix(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array())
        fail("expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
             " matrix as an array of rows");
    if (j.size() != rows)
        fail("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    std::vector<SparseMatrix::Triplet> ts;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols)
            fail("matrix row " + std::to_string(r + 1) + " must have " + std::to_string(cols) +
                 " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            Rational v = parse_rational_json(row[c]);
            if (v != 0) ts.push_back({r, c, std::move(v)});
        }
    }
    return SparseMatrix(rows, cols, ts);
}

FiniteGroupoid parse_groupoid(const nlohmann::json& j) {
    if (!j.is_object()) fail("groupoid: expected an object");
    const std::vector<std::string> objects =
        string_array(field(j, "objects", "groupoid"), "\"objects\"");

    const json& jarr = field(j, "arrows", "groupoid");
    if (!jarr.is_array()) fail("\"arrows\": expected an array of {id, src, tgt}");
    std::vector<FiniteGroupoid::ArrowSpec> arrows;
    for (const auto& a : jarr) {
        if (!a.is_object()) fail("\"arrows\": entries must be {id, src, tgt}");
        arrows.push_back({string_field(a, "id", "\"arrows\""), string_field(a, "src", "\"arrows\""),
                          string_field(a, "tgt", "\"arrows\"")});
    }

    const json& jmult = field(j, "mult", "groupoid");
    if (!jmult.is_array()) fail("\"mult\": expected an array of [g, h, gh]");
    std::vector<std::array<std::string, 3>> mult;
    for (const auto& m : jmult) {
        if (!m.is_array() || m.size() != 3 || !m[0].is_string() || !m[1].is_string() ||
            !m[2].is_string())
            fail("\"mult\": entries must be [g, h, gh]");
        mult.push_back({m[0].get<std::string>(), m[1].get<std::string>(), m[2].get<std::string>()});
    }

    const auto string_map = [&](const char* key) {
        const json& t = field(j, key, "groupoid");
        if (!t.is_object()) fail(std::string("\"") + key + "\": expected an object map");
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [k, v] : t.items()) {
            if (!v.is_string()) fail(std::string("\"") + key + "\": values must be strings");
            out.emplace_back(k, v.get<std::string>());
        }
        return out;
    };

    try {
        return FiniteGroupoid(objects, arrows, mult, string_map("units"), string_map("inverses"));
    } catch (const MalformedInput& e) {
        // referential breakage inside the tables is a document defect
        fail(std::string("groupoid: ") + e.what());
    }
}

LieFiberBundle parse_bundle(const nlohmann::json& j) {
    if (!j.is_object()) fail("algebroid: expected an object keyed by point label");
    if (j.empty()) fail("algebroid: needs at least one point");
    std::set<std::string> points;
    for (const auto& [k, v] : j.items()) {
        (void)v;
        points.insert(k);
    }
    LieFiberBundle b;
    for (const auto& p : points) {
        b.base.push_back(p);
        b.fibers.push_back(parse_algebra(j.at(p), "algebroid[\"" + p + "\"]"));
    }
    return b;
}

ModelDocument parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object()) fail("top level must be an object");
    const auto it = doc.find("format");
    if (it == doc.end()) fail("missing \"format\" tag");
    if (!it->is_string() || it->get<std::string>() != "laq-v1")
        fail("unsupported format " + it->dump() + ", expected \"laq-v1\"");

    const bool has_builder = doc.contains("builder");
    const bool has_explicit = doc.contains("explicit");
    if (has_builder == has_explicit) fail("need exactly one of \"builder\" or \"explicit\"");

    ModelDocument out{"", std::move(doc)};
    if (has_builder) {
        const json& jb = out.document["builder"];
        if (!jb.is_string()) fail("\"builder\" must be a string");
        out.builder = jb.get<std::string>();
        static const std::set<std::string> known = {"trivial_groupoid", "trivial_algebroid",
                                                    "equivariant",      "vacant",
                                                    "pair_zero",        "product"};
        if (!known.count(out.builder)) fail("unknown builder \"" + out.builder + "\"");
    }
    return out;
}

ModelDocument parse_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

LAGroupoid build_model(const ModelDocument& doc) { return build_node(doc.document); }

}  // namespace laq
