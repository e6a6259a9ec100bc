/*
 * module.cpp
 * ----------
 * Python bindings for the main operations: Coxeter systems with exact
 * word arithmetic, fully commutative classification, the rank-raising
 * tower maps, the Hecke and Temperley-Lieb morphism images, and the
 * named verification suites. Words cross the boundary as strings of
 * whitespace-separated tokens; "-" or "" denotes the identity.
 * Coefficients come back as {exponent: "integer"} dictionaries.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "fc/coxeter.hpp"
#include "fc/errors.hpp"
#include "fc/forms.hpp"
#include "fc/hecke.hpp"
#include "fc/suites.hpp"
#include "fc/tl.hpp"
#include "fc/towers.hpp"

namespace py = pybind11;
using namespace fc;

namespace {

CoxeterSystem system_of(const std::string& family, int rank) {
    auto fam = family_from_name(family);
    if (!fam) throw DomainError("unknown family " + family);
    return build_system(*fam, rank);
}

Word word_of(const CoxeterSystem& sys, const std::string& text) {
    if (text.empty() || text == "-") return {};
    return parse_word(sys, text);
}

std::string text_of(const CoxeterSystem& sys, const Word& w) {
    return w.empty() ? "-" : render_word(sys, w);
}

py::dict poly_dict(const LaurentPoly& p) {
    py::dict out;
    for (auto& [e, c] : p.coeffs) out[py::int_(e)] = c.to_string();
    return out;
}

py::dict comb_dict(const CoxeterSystem& sys, const LinComb& body) {
    py::dict out;
    for (auto& [w, c] : body.terms) out[py::str(text_of(sys, w))] = poly_dict(c);
    return out;
}

py::dict report_dict(const CheckReport& rep) {
    py::dict out;
    out["ok"] = rep.ok();
    out["checked"] = rep.checked;
    out["failures"] = rep.failures;
    return out;
}

TowerMapId tower_id(const std::string& op) {
    if (op == "Ln") return TowerMapId::Ln;
    if (op == "Fn") return TowerMapId::Fn;
    if (op == "Gn") return TowerMapId::Gn;
    if (op == "beta") return TowerMapId::Beta;
    if (op == "delta") return TowerMapId::Delta;
    throw DomainError("unknown tower map " + op);
}

AlgebraMapId algebra_id(const std::string& op) {
    if (op == "Rn") return AlgebraMapId::Rn;
    if (op == "Qn") return AlgebraMapId::Qn;
    if (op == "Pn") return AlgebraMapId::Pn;
    throw DomainError("unknown algebra map " + op);
}

// A thin value wrapper so Python sees one object per system.
struct PySystem {
    CoxeterSystem sys;
};

} // namespace

PYBIND11_MODULE(_fc, m) {
    m.doc() = "exact computations with fully commutative elements of "
              "the affine Coxeter types B and D";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "WordParseError", PyExc_ValueError);
    py::register_exception<NotFCError>(m, "NotFCError", PyExc_ValueError);
    py::register_exception<RankError>(m, "RankError", PyExc_ValueError);
    py::register_exception<InvalidFormError>(m, "InvalidFormError",
                                             PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<PySystem>(m, "System")
        .def(py::init([](const std::string& family, int rank) {
                 return PySystem{system_of(family, rank)};
             }),
             py::arg("family"), py::arg("rank"))
        .def_property_readonly(
            "family", [](const PySystem& s) { return family_name(s.sys.family); })
        .def_property_readonly("rank",
                               [](const PySystem& s) { return s.sys.rank; })
        .def_property_readonly("tokens",
                               [](const PySystem& s) { return s.sys.tokens; })
        .def("canonical",
             [](const PySystem& s, const std::string& w) {
                 return text_of(s.sys, canonical_word(
                                           s.sys, element_of(s.sys,
                                                             word_of(s.sys, w))));
             })
        .def("is_reduced",
             [](const PySystem& s, const std::string& w) {
                 return is_reduced(s.sys, word_of(s.sys, w));
             })
        .def("is_fully_commutative",
             [](const PySystem& s, const std::string& w) {
                 return is_fully_commutative(s.sys,
                                             element_of(s.sys, word_of(s.sys, w)));
             })
        .def("length",
             [](const PySystem& s, const std::string& w) {
                 return length(s.sys, element_of(s.sys, word_of(s.sys, w)));
             })
        .def("affine_length",
             [](const PySystem& s, const std::string& w) {
                 return affine_length(s.sys,
                                      element_of(s.sys, word_of(s.sys, w)));
             })
        .def("ball",
             [](const PySystem& s, int max_len, bool fc_only) {
                 std::vector<std::string> out;
                 for (auto& [x, w] : enumerate_ball(s.sys, max_len)) {
                     if (fc_only && !is_fully_commutative(s.sys, x)) continue;
                     out.push_back(text_of(s.sys, w));
                 }
                 return out;
             },
             py::arg("max_len"), py::arg("fc_only") = false)
        .def("classify",
             [](const PySystem& s, const std::string& text) {
                 Word w = word_of(s.sys, text);
                 GroupElement x = element_of(s.sys, w);
                 if (!is_fully_commutative(s.sys, x))
                     throw NotFCError("element is not fully commutative");
                 FcForm f = parse_form(s.sys, x);
                 py::dict out;
                 out["class"] = fc_class_name(f.cls);
                 out["psi1"] = f.psi1;
                 out["length"] = length(s.sys, x);
                 out["affine_length"] = form_affine_length(f);
                 out["word"] = text_of(s.sys, canonical_word(s.sys, x));
                 return out;
             })
        .def("reduce",
             [](const PySystem& s, const std::string& w) {
                 TLElt t = reduce_word(s.sys, word_of(s.sys, w));
                 return comb_dict(t.system, t.body);
             });

    m.def("tower_image",
          [](const std::string& op, int n, const std::string& text) {
              TowerMap map = make_tower_map(tower_id(op), n + 1);
              Word w = word_of(map.source, text);
              return text_of(map.target, tower_image(map, w));
          },
          py::arg("op"), py::arg("rank"), py::arg("word"),
          "Image word under Ln/Fn/Gn/beta/delta; rank is the classical "
          "subscript of the source.");

    m.def("injection_image",
          [](const std::string& op, const std::string& family, int n,
             const std::string& text) {
              if (op != "I" && op != "J") throw DomainError("op must be I or J");
              CoxeterSystem src = system_of(family, n + 1);
              CoxeterSystem dst = system_of(family, n + 2);
              Word w = word_of(src, text);
              GroupElement x = element_of(src, w);
              if (!is_fully_commutative(src, x))
                  throw NotFCError("element is not fully commutative");
              FcForm f = parse_form(src, x);
              FcForm img = op == "I" ? map_I(src, f) : map_J(src, f);
              return text_of(dst, render_form(dst, img));
          },
          py::arg("op"), py::arg("family"), py::arg("rank"), py::arg("word"));

    m.def("hecke_image",
          [](const std::string& op, int n, const std::string& text) {
              AlgebraMapId id = algebra_id(op);
              Family fam = id == AlgebraMapId::Qn   ? Family::Btilde
                           : id == AlgebraMapId::Pn ? Family::Dtilde
                                                    : Family::Ctilde;
              CoxeterSystem src = build_system(fam, n + 1);
              HeckeElt h = morphism_image(id, n, word_of(src, text));
              return comb_dict(h.system, h.body);
          },
          py::arg("op"), py::arg("rank"), py::arg("word"));

    m.def("tl_image",
          [](const std::string& op, int n, const std::string& text) {
              AlgebraMapId id = algebra_id(op);
              Family fam =
                  id == AlgebraMapId::Qn ? Family::Btilde : Family::Dtilde;
              CoxeterSystem src = build_system(fam, n + 1);
              TLElt t = tl_morphism_image(id, n, word_of(src, text));
              return comb_dict(t.system, t.body);
          },
          py::arg("op"), py::arg("rank"), py::arg("word"));

    m.def("suite_names", &suite_names);

    m.def("run_suite",
          [](const std::string& name, const std::string& fixtures_dir,
             int rank, int max_len) {
              SuiteOptions opt;
              opt.fixtures_dir = fixtures_dir;
              opt.rank = rank;
              opt.max_len = max_len;
              return report_dict(run_suite(name, opt));
          },
          py::arg("name"), py::arg("fixtures_dir") = "fixtures",
          py::arg("rank") = 4, py::arg("max_len") = 8);
}
