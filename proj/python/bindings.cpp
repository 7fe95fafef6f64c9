#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hmalab/decide.hpp"
#include "hmalab/errors.hpp"
#include "hmalab/normalizers.hpp"
#include "hmalab/rewrite.hpp"
#include "hmalab/semantics.hpp"
#include "hmalab/syntax.hpp"
#include "hmalab/weight.hpp"

namespace py = pybind11;
using namespace hmalab;

namespace {

Congruence congruence(const std::string& name) {
    auto k = parse_congruence(name);
    if (!k) throw py::value_error("unknown congruence: " + name);
    return *k;
}

SystemId system_id(const std::string& name) {
    if (name == "cp") return SystemId::cp;
    if (name == "cpt") return SystemId::cpt;
    throw py::value_error("unknown system: " + name);
}

py::int_ to_py(const BigInt& n) { return py::int_(py::str(n.str())); }

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["equivalent"] = v.equivalent;
    d["method"] = to_string(v.method);
    if (v.witness) {
        d["witness"] = write_state(v.witness->state, v.witness->probe_text());
        d["probe"] = v.witness->probe_text();
    } else {
        d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_hmalab, m) {
    m.doc() = "Conditional expressions, valuation congruences and their decision procedures";

    py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
    py::register_exception<GuardViolation>(m, "GuardViolation", PyExc_RuntimeError);
    py::register_exception<ConstraintViolation>(m, "ConstraintViolation", PyExc_ValueError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

    m.def("parse", [](const std::string& text) { return print_term(parse_term(text)); },
          "Parse a term and print it in ternary form");
    m.def("sugar", [](const std::string& text) { return print_term(parse_term(text), PrintStyle::sugared); });
    m.def("query_bound", [](const std::string& text) { return query_bound(parse_term(text)); });
    m.def("atoms", [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& a : atoms_of(parse_term(text))) out.push_back(a.name());
        return out;
    });
    m.def("weight", [](const std::string& text) { return weight(parse_term(text)).to_string(); });

    m.def(
        "normalize",
        [](const std::string& text, const std::string& k, std::optional<std::vector<std::string>> order) {
            std::optional<Alphabet> atoms;
            if (order) atoms = Alphabet::from_names(*order);
            return print_term(normal_form(parse_term(text), congruence(k), atoms).term());
        },
        py::arg("term"), py::arg("congruence") = "free", py::arg("order") = py::none());

    m.def(
        "equiv",
        [](const std::string& lhs, const std::string& rhs, const std::string& k, std::size_t probe_depth) {
            return verdict_dict(oracle_equivalent(parse_term(lhs), parse_term(rhs), congruence(k), std::nullopt,
                                                  probe_depth));
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("congruence") = "free", py::arg("probe_depth") = kDefaultProbeDepth);
    m.def("canonical_equiv", [](const std::string& lhs, const std::string& rhs, const std::string& k) {
        return canonical_equivalent(parse_term(lhs), parse_term(rhs), congruence(k)).equivalent;
    });
    m.def("profile", [](const std::string& lhs, const std::string& rhs) {
        py::dict d;
        for (const auto& [k, e] : equivalence_profile(parse_term(lhs), parse_term(rhs)))
            d[py::str(to_string(k))] = e.equivalent;
        return d;
    });

    m.def(
        "rewrite",
        [](const std::string& text, const std::string& system) {
            auto n = normalize(parse_term(text), RewriteSystem::get(system_id(system)));
            return py::make_tuple(print_term(n.normal_form), render_trace(n.trace));
        },
        py::arg("term"), py::arg("system") = "cp");
    m.def(
        "critical_pairs",
        [](const std::string& system) {
            py::list out;
            const auto id = system_id(system);
            for (const auto& cp : critical_pairs(id)) {
                const auto r = join(cp, RewriteSystem::get(id));
                py::dict d;
                d["rules"] = cp.label;
                d["overlap"] = print_term(cp.overlap.shape());
                d["left_normal"] = print_term(r.left_normal);
                d["right_normal"] = print_term(r.right_normal);
                d["joinable"] = r.joinable;
                out.append(d);
            }
            return out;
        },
        py::arg("system") = "cp");

    m.def("evaluate", [](const std::string& text, const std::string& state) {
        auto e = evaluate(parse_term(text), read_state(state).state);
        return py::make_tuple(e.reply, write_state(e.state));
    });

    m.def("count_mem", [](unsigned n) { return to_py(count_mem(n)); });
    m.def("count_core", [](unsigned n) { return to_py(count_core_strings(n)); });
    m.def("mem_basic_forms", [](const std::vector<std::string>& atoms) {
        std::vector<std::string> out;
        for_each_mem_basic_form(Alphabet::from_names(atoms),
                                [&](const BasicForm& f) { out.push_back(print_term(f.term())); });
        return out;
    });
}
