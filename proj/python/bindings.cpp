// Python face of the library. The Model class is an opaque handle to the
// validated-or-not square; every query builds what it needs on the fly, which
// keeps the surface small and the exact arithmetic entirely on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laq/builders.hpp"
#include "laq/double_complex.hpp"
#include "laq/errors.hpp"
#include "laq/la_groupoid.hpp"
#include "laq/model_io.hpp"
#include "laq/selftest.hpp"

namespace py = pybind11;
using namespace laq;

namespace {

struct Model {
    LAGroupoid square;
};

Model load_model(const std::string& text) { return {build_model(parse_model(text))}; }
Model load_model_file(const std::string& path) {
    return {build_model(parse_model_file(path))};
}

py::dict validate(const Model& m) {
    py::dict out;
    auto g = validate_groupoid(m.square.base);
    if (!g.ok) {
        out["ok"] = false;
        out["check"] = "groupoid-" + g.axiom;
        out["witness"] = g.witness;
        return out;
    }
    auto la = validate_la(m.square);
    if (!la.ok) {
        out["ok"] = false;
        out["check"] = la.check;
        out["witness"] = la.witness;
        return out;
    }
    auto rel = check_multiplicative(m.square);
    if (!rel.ok) {
        out["ok"] = false;
        out["check"] = "multiplicative";
        out["witness"] = rel.context + ": " + rel.residue;
        return out;
    }
    out["ok"] = true;
    out["check"] = "";
    out["witness"] = "";
    return out;
}

std::vector<std::size_t> cohomology(const Model& m, std::size_t max_degree,
                                    std::optional<std::pair<std::size_t, std::size_t>> window) {
    auto w = window.value_or(std::make_pair(max_degree + 1, max_degree + 1));
    DoubleComplex c = assemble(m.square, w.first, w.second);
    return total_cohomology(c, max_degree).dims;
}

py::dict spectral(const Model& m, int page, const std::string& orientation,
                  std::pair<std::size_t, std::size_t> window) {
    Orientation o;
    if (orientation == "delta-first")
        o = Orientation::delta_first;
    else if (orientation == "psi-first")
        o = Orientation::psi_first;
    else
        throw MalformedInput("orientation must be 'delta-first' or 'psi-first'");
    DoubleComplex c = assemble(m.square, window.first, window.second);
    SpectralPage p;
    if (page == 1)
        p = e1_page(c, o);
    else if (page == 2)
        p = e2_page(c, o);
    else
        throw MalformedInput("page must be 1 or 2");
    py::dict out;
    out["page"] = p.page;
    out["dims"] = p.dims;
    out["valid"] = p.valid;
    return out;
}

std::vector<std::pair<std::string, std::size_t>> nerve_fibers(const Model& m,
                                                              std::uint32_t level) {
    NerveAlgebroid n = nerve_algebroid(m.square, level);
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const NerveFiber& f : n.fibers)
        out.emplace_back(to_string(m.square.base, f.tuple), f.basis.dim());
    return out;
}

py::list acceptance() {
    py::list out;
    for (const CriterionResult& r : run_acceptance()) {
        py::dict d;
        d["number"] = r.number;
        d["name"] = r.name;
        d["ok"] = r.ok;
        d["detail"] = r.detail;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact cohomology of finite LA-groupoids";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<Model>(mod, "Model")
        .def_property_readonly("objects",
                               [](const Model& m) { return m.square.base.object_count(); })
        .def_property_readonly("arrows",
                               [](const Model& m) { return m.square.base.arrow_count(); })
        .def_property_readonly("vacant", [](const Model& m) { return vacancy_check(m.square); })
        .def("__repr__", [](const Model& m) {
            return "<laq.Model " + std::to_string(m.square.base.object_count()) + " objects, " +
                   std::to_string(m.square.base.arrow_count()) + " arrows>";
        });

    mod.def("load_model", &load_model, py::arg("text"),
            "parse a laq-v1 json document and build the square");
    mod.def("load_model_file", &load_model_file, py::arg("path"));
    mod.def("validate", &validate, py::arg("model"),
            "groupoid axioms, LA structure and multiplicativity; first failure wins");
    mod.def("total_cohomology", &cohomology, py::arg("model"), py::arg("max_degree"),
            py::arg("window") = py::none(),
            "exact dims of H^0..H^max_degree of the total complex");
    mod.def("spectral", &spectral, py::arg("model"), py::arg("page"),
            py::arg("orientation") = "delta-first",
            py::arg("window") = std::make_pair(std::size_t(4), std::size_t(4)),
            "dimension grid of the E1/E2 page with its truncation mask");
    mod.def("nerve_fibers", &nerve_fibers, py::arg("model"), py::arg("level"),
            "per-tuple fiber dimensions at one nerve level");
    mod.def("acceptance", &acceptance, "run the acceptance suite");
}
