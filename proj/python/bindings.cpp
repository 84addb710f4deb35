#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dialg/cayley_dickson.hpp"
#include "dialg/catalog.hpp"
#include "dialg/checker.hpp"
#include "dialg/classify2d.hpp"
#include "dialg/io.hpp"
#include "dialg/kp.hpp"

namespace py = pybind11;
using namespace dialg;

namespace {

struct Algebra {
    DialgebraTable table;
    std::optional<Involution> involution;

    const Involution* sigma() const { return involution ? &*involution : nullptr; }
};

Algebra from_loaded(LoadedAlgebra l) { return {std::move(l.table), std::move(l.involution)}; }

Product product(const std::string& op) {
    if (op == "left" || op == "-|") return Product::Left;
    if (op == "right" || op == "|-") return Product::Right;
    throw py::value_error("product must be 'left' or 'right'");
}

std::string verdict_json(const Algebra& a, const Verdict& v) { return verdict_to_json(v, a.table.basis()).dump(); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations with dialgebras";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Algebra>(m, "Algebra")
        .def_property_readonly("dim", [](const Algebra& a) { return a.table.dim(); })
        .def_property_readonly("basis", [](const Algebra& a) { return a.table.basis(); })
        .def_property_readonly("has_involution", [](const Algebra& a) { return a.involution.has_value(); })
        .def_property_readonly("is_algebra", [](const Algebra& a) { return a.table.is_algebra(); })
        .def("multiply",
             [](const Algebra& a, const std::string& op, const std::string& u, const std::string& v) {
                 const auto& l = a.table.basis();
                 return format_vector(a.table.multiply(product(op), parse_vector(u, l), parse_vector(v, l)), l);
             },
             py::arg("op"), py::arg("u"), py::arg("v"))
        .def("star",
             [](const Algebra& a, const std::string& u) {
                 if (!a.involution) throw py::value_error("algebra has no involution");
                 const auto& l = a.table.basis();
                 return format_vector(a.involution->apply(parse_vector(u, l)), l);
             })
        .def("table", [](const Algebra& a, const std::string& op) { return render_table(a.table, parse_table_op(op)); },
             py::arg("op") = "left")
        .def("to_json", [](const Algebra& a) { return to_json(a.table, a.sigma()).dump(); })
        .def("__eq__", [](const Algebra& a, const Algebra& b) { return a.table == b.table && a.involution == b.involution; })
        .def("__repr__", [](const Algebra& a) { return "<Algebra dim=" + std::to_string(a.table.dim()) + ">"; });

    m.def("builtin_names", &builtin_dialgebra_names);
    m.def("builtin", [](const std::string& name) {
        const auto& e = builtin_dialgebra(name);
        return Algebra{e.table, e.involution};
    });
    m.def("from_json", [](const std::string& text) { return from_loaded(from_json(nlohmann::json::parse(text))); });
    m.def("load", [](const std::string& path) { return from_loaded(load(path)); });

    m.def("double",
          [](const Algebra& a, const std::string& gamma, bool diamond) {
              if (!a.involution) throw py::value_error("doubling needs an involution");
              Rational g = Rational::parse(gamma);
              Doubled d = diamond ? diamond_double(a.table, *a.involution, g) : cd_double(a.table, *a.involution, g);
              return Algebra{d.table, d.involution};
          },
          py::arg("algebra"), py::arg("gamma") = "-1", py::arg("diamond") = false);
    m.def("quotient", [](const Algebra& a) {
        Quotient q = quotient_alg(a.table);
        return Algebra{q.algebra, std::nullopt};
    });
    m.def("leibniz", [](const Algebra& a) { return Algebra{bracket_table(a.table), std::nullopt}; });
    m.def("jordan", [](const Algebra& a) { return Algebra{diproduct_table(a.table), std::nullopt}; });

    m.def("check_identity_json", [](const Algebra& a, const std::string& text) {
        return verdict_json(a, verify(a.table, a.sigma(), parse_identity(text)));
    });
    m.def("check_predicate_json", [](const Algebra& a, const std::string& name) {
        return verdict_json(a, check_predicate(a.table, a.sigma(), name));
    });
    m.def("predicates", [](const Algebra& a) {
        std::map<std::string, bool> out;
        for (const auto& [k, v] : classify_predicates(a.table, a.sigma())) out[k] = v.passed;
        return out;
    });
    m.def("predicate_names", &predicate_names);

    m.def("identity_set", [](const std::string& name) {
        std::vector<std::string> out;
        for (const auto& id : builtin(name)) out.push_back(render_identity(id));
        return out;
    });
    m.def("canonical", [](const std::string& text, bool push) {
        return render_identity(canonical_form(parse_identity(text), {.push_stars = push}).to_identity());
    }, py::arg("identity"), py::arg("push_stars") = true);
    m.def("kp", [](const std::string& text, bool independent) {
        KpFamily fam = kp_identity(parse_identity(text));
        std::vector<std::string> out;
        for (const auto& c : independent ? fam.independent : fam.identities) out.push_back(render_identity(c.to_identity()));
        return out;
    }, py::arg("identity"), py::arg("independent") = false);

    m.def("grid_search", [](const std::vector<std::string>& grid) {
        std::vector<Rational> g;
        for (const auto& s : grid) g.push_back(Rational::parse(s));
        GridResult r = grid_search(g);
        py::list sols;
        for (const auto& s : r.solutions) {
            std::vector<std::string> p;
            for (const auto& c : s.point) p.push_back(c.to_string());
            py::dict d;
            d["point"] = p;
            d["families"] = s.families;
            d["proper"] = s.proper;
            sols.append(d);
        }
        py::dict out;
        out["solutions"] = sols;
        out["violations"] = r.violations.size();
        out["points_checked"] = r.points_checked;
        return out;
    });
}
