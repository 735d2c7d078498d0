#include "laq/commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "laq/errors.hpp"
#include "laq/model_io.hpp"
#include "laq/selftest.hpp"

namespace laq {

namespace {

using nlohmann::json;

std::string render_table(const ReportTable& t) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    const auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    widen(t.columns);
    for (const auto& row : t.rows) widen(row);

    std::ostringstream out;
    out << "table: " << t.title << "\n";
    const auto line = [&](const std::vector<std::string>& row) {
        out << " ";
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << " " << row[i];
            if (i + 1 < row.size()) out << std::string(width[i] - row[i].size(), ' ');
        }
        out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
    return out.str();
}

// wraps a command body with timing and the exit-code contract: ParseError is
// a document problem (2), any other laq error a semantic one (1)
Report run(std::string command, const std::function<void(Report&)>& body) {
    Report r;
    r.command = std::move(command);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const ParseError& e) {
        r.exit_status = 2;
        std::string note = "parse error";
        if (e.byte_offset != 0) note += " at byte " + std::to_string(e.byte_offset);
        r.notes.push_back(note + ": " + e.what());
    } catch (const Error& e) {
        r.exit_status = 1;
        r.notes.push_back(std::string("error: ") + e.what());
    }
    r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

// full validation; appends one check entry and reports overall health
bool validated(Report& r, const LAGroupoid& l) {
    const auto g = validate_groupoid(l.base);
    if (!g) {
        r.checks.push_back({"model-valid", false, g.axiom + ": " + g.witness});
        return false;
    }
    const auto s = validate_la(l);
    if (!s) {
        r.checks.push_back({"model-valid", false, s.check + ": " + s.witness});
        return false;
    }
    const auto m = check_multiplicative(l);
    if (!m) {
        r.checks.push_back({"model-valid", false, m.context + ": " + m.residue});
        return false;
    }
    r.checks.push_back({"model-valid", true, ""});
    return true;
}

Window cohomology_window(std::size_t max_degree, const std::optional<Window>& window) {
    return window.value_or(Window{max_degree + 1, max_degree + 1});
}

}  // namespace

std::string emit_text(const Report& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    for (const auto& c : r.checks) {
        out << "check " << c.name << ": " << (c.ok ? "ok" : "FAIL");
        if (!c.ok && !c.witness.empty()) out << "  " << c.witness;
        out << "\n";
    }
    for (const auto& t : r.tables) out << render_table(t);
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    out << "elapsed_us: " << r.elapsed_us << "\n";
    out << "exit: " << r.exit_status << "\n";
    return out.str();
}

std::string emit_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
    json tables = json::array();
    for (const auto& t : r.tables)
        tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    const json doc = {{"command", r.command},       {"checks", checks},
                      {"tables", tables},           {"notes", r.notes},
                      {"elapsed_us", r.elapsed_us}, {"exit_status", r.exit_status}};
    return doc.dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    const auto need = [&](const json& j, const char* key) -> const json& {
        const auto it = j.find(key);
        if (it == j.end()) throw ParseError(std::string("report: missing \"") + key + "\"");
        return *it;
    };
    if (!doc.is_object()) throw ParseError("report: top level must be an object");

    Report r;
    r.command = need(doc, "command").get<std::string>();
    for (const auto& c : need(doc, "checks")) {
        ReportCheck rc;
        rc.name = need(c, "name").get<std::string>();
        rc.ok = need(c, "ok").get<bool>();
        rc.witness = need(c, "witness").get<std::string>();
        r.checks.push_back(std::move(rc));
    }
    for (const auto& t : need(doc, "tables")) {
        ReportTable rt;
        rt.title = need(t, "title").get<std::string>();
        rt.columns = need(t, "columns").get<std::vector<std::string>>();
        rt.rows = need(t, "rows").get<std::vector<std::vector<std::string>>>();
        r.tables.push_back(std::move(rt));
    }
    r.notes = need(doc, "notes").get<std::vector<std::string>>();
    r.elapsed_us = need(doc, "elapsed_us").get<std::int64_t>();
    r.exit_status = need(doc, "exit_status").get<int>();
    return r;
}

Report cmd_validate(const std::string& path) {
    return run("validate " + path, [&](Report& r) {
        const LAGroupoid l = build_model(parse_model_file(path));
        const auto g = validate_groupoid(l.base);
        r.checks.push_back({"groupoid-axioms", g.ok, g.ok ? "" : g.axiom + ": " + g.witness});
        const auto s = validate_la(l);
        r.checks.push_back({"la-structure", s.ok, s.ok ? "" : s.check + ": " + s.witness});
        const auto m = check_multiplicative(l);
        r.checks.push_back({"multiplicative", m.ok, m.ok ? "" : m.context + ": " + m.residue});
        if (!(g.ok && s.ok && m.ok)) r.exit_status = 1;
    });
}

Report cmd_cohomology(const std::string& path, std::size_t max_degree,
                      std::optional<Window> window) {
    return run("cohomology " + path + " --max-degree " + std::to_string(max_degree),
               [&](Report& r) {
                   const LAGroupoid l = build_model(parse_model_file(path));
                   if (!validated(r, l)) {
                       r.exit_status = 1;
                       return;
                   }
                   const Window w = cohomology_window(max_degree, window);
                   const DoubleComplex c = assemble(l, w.first, w.second);
                   const CohomologyTable h = total_cohomology(c, max_degree);
                   r.notes.push_back("window p <= " + std::to_string(h.p_window) + ", q <= " +
                                     std::to_string(h.q_window));
                   ReportTable t{"total cohomology", {"n", "dim H^n"}, {}};
                   for (std::size_t n = 0; n < h.dims.size(); ++n)
                       t.rows.push_back({std::to_string(n), std::to_string(h.dims[n])});
                   r.tables.push_back(std::move(t));
               });
}

Report cmd_spectral(const std::string& path, int page, Orientation orientation,
                    std::optional<Window> window) {
    const char* oname = orientation == Orientation::delta_first ? "delta-first" : "psi-first";
    return run("spectral " + path + " --page " + std::to_string(page) + " --orientation " + oname,
               [&](Report& r) {
                   if (page != 1 && page != 2) throw MalformedInput("page must be 1 or 2");
                   const LAGroupoid l = build_model(parse_model_file(path));
                   if (!validated(r, l)) {
                       r.exit_status = 1;
                       return;
                   }
                   const Window w = window.value_or(Window{4, 4});
                   const DoubleComplex c = assemble(l, w.first, w.second);
                   const SpectralPage e =
                       page == 1 ? e1_page(c, orientation) : e2_page(c, orientation);
                   r.notes.push_back("window p <= " + std::to_string(w.first) + ", q <= " +
                                     std::to_string(w.second) + "; masked cells shown as .");
                   ReportTable t{"E" + std::to_string(page) + " page (" + oname + ")", {"p\\q"}, {}};
                   for (std::size_t q = 0; q <= c.q_max; ++q)
                       t.columns.push_back(std::to_string(q));
                   for (std::size_t p = 0; p <= c.p_max; ++p) {
                       std::vector<std::string> row{std::to_string(p)};
                       for (std::size_t q = 0; q <= c.q_max; ++q)
                           row.push_back(e.valid[p][q] ? std::to_string(e.dims[p][q]) : ".");
                       t.rows.push_back(std::move(row));
                   }
                   r.tables.push_back(std::move(t));
               });
}

Report cmd_nerve(const std::string& path, std::uint32_t level) {
    return run("nerve " + path + " --level " + std::to_string(level), [&](Report& r) {
        const LAGroupoid l = build_model(parse_model_file(path));
        if (!validated(r, l)) {
            r.exit_status = 1;
            return;
        }
        const NerveAlgebroid lvl = nerve_algebroid(l, level);
        r.notes.push_back("level " + std::to_string(level) + ": " +
                          std::to_string(lvl.fibers.size()) + " composable tuples");
        ReportTable t{"nerve level " + std::to_string(level), {"tuple", "fiber dim"}, {}};
        for (const auto& f : lvl.fibers)
            t.rows.push_back({to_string(l.base, f.tuple), std::to_string(f.algebra.dim())});
        r.tables.push_back(std::move(t));
    });
}

Report cmd_selftest() {
    return run("selftest", [&](Report& r) {
        const auto results = run_acceptance();
        for (const auto& c : results) {
            r.checks.push_back({"criterion-" + std::to_string(c.number) + " " + c.name, c.ok,
                                c.ok ? "" : c.detail});
            if (!c.ok && r.exit_status == 0) {
                r.exit_status = 1;
                r.notes.push_back("first failing criterion: " + std::to_string(c.number) + " (" +
                                  c.name + ")");
            }
        }
    });
}

}  // namespace laq
