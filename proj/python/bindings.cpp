// SPDX-License-Identifier: Apache-2.0

#include "qadd/baseline.hpp"
#include "qadd/circuit.hpp"
#include "qadd/cli.hpp"
#include "qadd/export.hpp"
#include "qadd/passes.hpp"
#include "qadd/resources.hpp"
#include "qadd/simulator.hpp"
#include "qadd/synthesis.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qadd;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object report_to_py(const ResourceReport& r) { return json_to_py(to_json(r)); }

py::dict pass_report_to_py(const PassReport& r) {
    py::dict d;
    d["pass_name"] = r.pass_name;
    d["gates_before"] = r.gates_before;
    d["gates_after"] = r.gates_after;
    d["iterations_to_fixpoint"] = r.iterations_to_fixpoint;
    return d;
}

} // namespace

PYBIND11_MODULE(_qadd, m) {
    m.doc() = "Adder-by-constant synthesis, simulation and resource audit";

    static py::exception<Error> error(m, "QaddError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    py::enum_<Register>(m, "Register")
        .value("data", Register::data)
        .value("ancilla", Register::ancilla)
        .value("control", Register::control);

    py::enum_<GateKind>(m, "GateKind")
        .value("X", GateKind::X)
        .value("CXClassical", GateKind::CXClassical)
        .value("CNOT", GateKind::CNOT)
        .value("Toffoli", GateKind::Toffoli)
        .value("And", GateKind::And)
        .value("AndDagger", GateKind::AndDagger);

    py::enum_<Variant>(m, "Variant")
        .value("unoptimized", Variant::unoptimized)
        .value("optimized", Variant::optimized)
        .value("controlled", Variant::controlled)
        .value("baseline_cuccaro", Variant::baseline_cuccaro)
        .value("custom", Variant::custom);

    py::enum_<CostFormula>(m, "CostFormula")
        .value("proposed_optimized", CostFormula::proposed_optimized)
        .value("proposed_controlled", CostFormula::proposed_controlled)
        .value("cuccaro_reference", CostFormula::cuccaro_reference)
        .value("draper_cla_reference", CostFormula::draper_cla_reference)
        .value("takahashi_reference", CostFormula::takahashi_reference)
        .value("gidney_reference", CostFormula::gidney_reference);

    py::class_<QubitRef>(m, "QubitRef")
        .def(py::init<Register, std::uint32_t>(), py::arg("reg"), py::arg("index"))
        .def_readonly("reg", &QubitRef::reg)
        .def_readonly("index", &QubitRef::index)
        .def_static("data", &QubitRef::data)
        .def_static("ancilla", &QubitRef::ancilla)
        .def_static("control", &QubitRef::control)
        .def("__eq__", [](const QubitRef& a, const QubitRef& b) { return a == b; })
        .def("__repr__", [](const QubitRef& q) { return to_string(q); });

    py::class_<Gate>(m, "Gate")
        .def(py::init<GateKind, std::vector<QubitRef>, bool>(), py::arg("kind"), py::arg("operands"),
             py::arg("classical_bit") = false)
        .def_property_readonly("kind", &Gate::kind)
        .def_property_readonly("operands",
                               [](const Gate& g) { return std::vector<QubitRef>(g.operands().begin(), g.operands().end()); })
        .def_property_readonly("classical_bit", &Gate::classical_bit)
        .def("__eq__", [](const Gate& a, const Gate& b) { return a == b; })
        .def("__repr__", [](const Gate& g) { return to_string(g); });

    py::class_<Constant>(m, "Constant")
        .def_readonly("raw", &Constant::raw)
        .def_readonly("width", &Constant::width)
        .def_readonly("shift", &Constant::shift)
        .def_readonly("odd_part", &Constant::odd_part)
        .def_readonly("effective_width", &Constant::effective_width)
        .def("reduced", &Constant::reduced)
        .def("is_identity", &Constant::is_identity);

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::uint32_t, std::uint32_t, bool, std::vector<Gate>, Variant, std::optional<Constant>>(),
             py::arg("n_data"), py::arg("n_ancilla"), py::arg("has_control"), py::arg("gates"),
             py::arg("variant") = Variant::custom, py::arg("constant") = std::nullopt)
        .def_property_readonly("n_data", &Circuit::n_data)
        .def_property_readonly("n_ancilla", &Circuit::n_ancilla)
        .def_property_readonly("has_control", &Circuit::has_control)
        .def_property_readonly("variant", &Circuit::variant)
        .def_property_readonly("constant", &Circuit::constant)
        .def_property_readonly("gates",
                               [](const Circuit& c) { return std::vector<Gate>(c.gates().begin(), c.gates().end()); })
        .def("__len__", &Circuit::size)
        .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

    m.def("normalize_constant", &normalize_constant, py::arg("a"), py::arg("n"));
    m.def("maj_value", &maj_value, py::arg("x"), py::arg("y"), py::arg("a"));
    m.def("maj_block", &maj_block, py::arg("a_bit"), py::arg("x"), py::arg("y"), py::arg("t"));
    m.def("inverse_of", &inverse_of);
    m.def("validate", [](const Circuit& c) -> py::object {
        auto issue = validate(c);
        if (!issue) {
            return py::none();
        }
        py::dict d;
        d["code"] = std::string(to_string(issue->code));
        d["gate_index"] = issue->gate_index;
        d["message"] = issue->message;
        return d;
    });
    m.def("adjoint", &adjoint);

    m.def("synth", &synth, py::arg("a"), py::arg("n"), py::arg("variant") = Variant::optimized,
          py::arg("controlled") = false);
    m.def("synth_unoptimized", &synth_unoptimized);
    m.def("synth_optimized", &synth_optimized);
    m.def("synth_controlled", &synth_controlled);
    m.def("synth_small", &synth_small);

    m.def(
        "run",
        [](const Circuit& c, std::uint64_t data, bool control) {
            const BasisState s = run(c, {data, 0, control});
            return py::make_tuple(s.data, s.control);
        },
        py::arg("circuit"), py::arg("data"), py::arg("control") = false,
        "Run on a basis input with clean ancillas; returns (data, control).");
    m.def("permutation_table", &permutation_table, py::arg("circuit"), py::arg("cap") = kDefaultTableCap);
    m.def(
        "assert_equivalent",
        [](const Circuit& a, const Circuit& b) -> py::object {
            auto cex = assert_equivalent(a, b);
            if (!cex) {
                return py::none();
            }
            return py::make_tuple(cex->input, cex->left, cex->right);
        },
        "None if equivalent, else (input, left_output, right_output) for the least differing input.");

    m.def("census", [](const Circuit& c) { return report_to_py(census(c)); });
    m.def("audit", [](const Circuit& c) { return report_to_py(audit(c)); });
    m.def("expected_formulas", [](CostFormula f, std::uint32_t n) {
        const ExpectedCost e = expected_formulas(f, n);
        return py::make_tuple(e.ancilla, e.t_count);
    });

    m.def("pass_names", &pass_names);
    m.def("run_pipeline", [](const Circuit& c, const std::vector<std::string>& passes) {
        auto [out, reports] = run_pipeline(c, passes);
        py::list lst;
        for (const auto& r : reports) {
            lst.append(pass_report_to_py(r));
        }
        return py::make_tuple(out, lst);
    });

    m.def("synth_cuccaro_mod", &synth_cuccaro_mod);
    m.def("reduce_to_constant", &reduce_to_constant, py::arg("adder"), py::arg("a"));
    m.def(
        "comparison_table",
        [](std::uint32_t n, std::uint64_t a) { return json_to_py(to_json(comparison_table(n, a), n)); },
        py::arg("n"), py::arg("a") = 1);

    m.def("to_qasm", &to_qasm);
    m.def("to_json", [](const Circuit& c) { return to_json(c).dump(); });
    m.def("circuit_from_json", [](const std::string& s) {
        try {
            return circuit_from_json(nlohmann::json::parse(s));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    });

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Run a qadd command; returns (exit_code, stdout, stderr).");
}
