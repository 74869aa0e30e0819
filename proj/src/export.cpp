// SPDX-License-Identifier: Apache-2.0

#include "qadd/export.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qadd {
namespace {

    std::string qasm_name(const QubitRef& q) {
        switch (q.reg) {
        case Register::data: return "b[" + std::to_string(q.index) + "]";
        case Register::ancilla: return "anc[" + std::to_string(q.index) + "]";
        case Register::control: return "ctl[" + std::to_string(q.index) + "]";
        }
        return "?";
    }

    std::string operand_list(const Gate& g) {
        std::string s;
        for (const auto& q : g.operands()) {
            if (!s.empty()) {
                s += ", ";
            }
            s += qasm_name(q);
        }
        return s;
    }

    std::optional<Register> register_from_string(std::string_view s) {
        for (auto r : {Register::data, Register::ancilla, Register::control}) {
            if (to_string(r) == s) {
                return r;
            }
        }
        return std::nullopt;
    }

    std::optional<GateKind> kind_from_string(std::string_view s) {
        for (auto k : {GateKind::X, GateKind::CXClassical, GateKind::CNOT, GateKind::Toffoli, GateKind::And,
                       GateKind::AndDagger}) {
            if (to_string(k) == s) {
                return k;
            }
        }
        return std::nullopt;
    }

    std::string signed_delta(std::int64_t d) { return (d > 0 ? "+" : "") + std::to_string(d); }

} // namespace

ordered_json to_json(const ResourceReport& r) {
    ordered_json j;
    j["variant"] = to_string(r.variant);
    j["n"] = r.n;
    j["a"] = r.a ? ordered_json(*r.a) : ordered_json(nullptr);
    j["ancilla"] = r.ancilla;
    j["and_pairs"] = r.and_pairs;
    j["toffoli"] = r.toffoli;
    j["cnot"] = r.cnot;
    j["x"] = r.x;
    j["cx_slots"] = r.cx_slots;
    j["cx_emitted"] = r.cx_emitted;
    j["t_count"] = r.t_count;
    if (r.formula_expected) {
        j["formula_expected"] = {{"ancilla", r.formula_expected->ancilla}, {"t_count", r.formula_expected->t_count}};
    } else {
        j["formula_expected"] = nullptr;
    }
    j["conforms"] = r.conforms;
    return j;
}

ordered_json to_json(const Circuit& c) {
    ordered_json gates = ordered_json::array();
    for (const Gate& g : c.gates()) {
        ordered_json jg;
        jg["kind"] = to_string(g.kind());
        if (g.kind() == GateKind::CXClassical) {
            jg["bit"] = g.classical_bit() ? 1 : 0;
        }
        ordered_json ops = ordered_json::array();
        for (const auto& q : g.operands()) {
            ops.push_back(ordered_json::array({to_string(q.reg), q.index}));
        }
        jg["operands"] = std::move(ops);
        gates.push_back(std::move(jg));
    }
    ordered_json j;
    j["n_data"] = c.n_data();
    j["n_ancilla"] = c.n_ancilla();
    j["has_control"] = c.has_control();
    j["gates"] = std::move(gates);
    return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
    try {
        std::vector<Gate> gates;
        for (const auto& jg : j.at("gates")) {
            const auto kind = kind_from_string(jg.at("kind").get<std::string>());
            if (!kind) {
                throw Error(ErrorCode::ParseError, "unknown gate kind " + jg.at("kind").dump());
            }
            std::vector<QubitRef> ops;
            for (const auto& jq : jg.at("operands")) {
                const auto reg = register_from_string(jq.at(0).get<std::string>());
                if (!reg) {
                    throw Error(ErrorCode::ParseError, "unknown register " + jq.at(0).dump());
                }
                ops.push_back({*reg, jq.at(1).get<std::uint32_t>()});
            }
            const bool bit = jg.contains("bit") && jg.at("bit").get<int>() != 0;
            gates.emplace_back(*kind, std::move(ops), bit);
        }
        return Circuit(j.at("n_data").get<std::uint32_t>(), j.at("n_ancilla").get<std::uint32_t>(),
                       j.at("has_control").get<bool>(), std::move(gates));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string to_qasm(const Circuit& c) {
    const ResourceReport report = audit(c);
    std::ostringstream os;
    os << "OPENQASM 3.0;\n";
    os << "// adder-by-constant";
    if (c.constant()) {
        os << " a=" << c.constant()->raw << " n=" << c.constant()->width;
    }
    os << " variant=" << to_string(c.variant()) << "\n";
    os << "// resources: " << to_json(report).dump() << "\n";
    os << "// t_count=" << report.t_count << "\n";
    os << "include \"stdgates.inc\";\n";
    os << "qubit[" << c.n_data() << "] b;\n";
    if (c.n_ancilla() > 0) {
        os << "qubit[" << c.n_ancilla() << "] anc;\n";
    }
    if (c.has_control()) {
        os << "qubit[1] ctl;\n";
    }
    for (const Gate& g : c.gates()) {
        switch (g.kind()) {
        case GateKind::X: os << "x " << operand_list(g) << ";\n"; break;
        case GateKind::CXClassical:
            if (g.classical_bit()) {
                os << "x " << operand_list(g) << ";\n";
            }
            break;
        case GateKind::CNOT: os << "cx " << operand_list(g) << ";\n"; break;
        case GateKind::Toffoli: os << "ccx " << operand_list(g) << ";\n"; break;
        case GateKind::And: os << "// and\nccx " << operand_list(g) << ";\n"; break;
        case GateKind::AndDagger: os << "// and_dagger\nccx " << operand_list(g) << ";\n"; break;
        }
    }
    return os.str();
}

std::string to_text(const Circuit& c) {
    std::ostringstream os;
    os << "# n_data=" << c.n_data() << " n_ancilla=" << c.n_ancilla() << " has_control=" << c.has_control()
       << " variant=" << to_string(c.variant()) << "\n";
    for (const Gate& g : c.gates()) {
        os << to_string(g) << "\n";
    }
    return os.str();
}

ordered_json to_json(const std::vector<ComparisonRow>& rows, std::uint32_t n) {
    ordered_json out;
    out["n"] = n;
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        const auto [ancilla_expr, t_expr] = formula_text(row.formula);
        ordered_json j;
        j["name"] = row.name;
        j["ancilla_expr"] = ancilla_expr;
        j["t_expr"] = t_expr;
        j["ancilla_formula"] = row.ancilla_formula;
        j["t_formula"] = row.t_formula;
        j["ancilla_measured"] = row.ancilla_measured ? ordered_json(*row.ancilla_measured) : ordered_json(nullptr);
        j["t_measured"] = row.t_measured ? ordered_json(*row.t_measured) : ordered_json(nullptr);
        if (row.ancilla_measured && row.t_measured) {
            j["ancilla_delta"] = static_cast<std::int64_t>(*row.ancilla_measured) -
                                 static_cast<std::int64_t>(row.ancilla_formula);
            j["t_delta"] = static_cast<std::int64_t>(*row.t_measured) - static_cast<std::int64_t>(row.t_formula);
        } else {
            j["ancilla_delta"] = nullptr;
            j["t_delta"] = nullptr;
        }
        jrows.push_back(std::move(j));
    }
    out["rows"] = std::move(jrows);
    return out;
}

std::string to_text(const std::vector<ComparisonRow>& rows, std::uint32_t n) {
    std::vector<std::pair<std::string, std::string>> cells;
    std::size_t name_w = std::string("adder").size();
    std::size_t anc_w = std::string("ancilla(formula)").size();
    std::size_t t_w = std::string("t_count(formula)").size();
    for (const auto& row : rows) {
        const auto [ancilla_expr, t_expr] = formula_text(row.formula);
        cells.emplace_back(std::string(ancilla_expr) + " = " + std::to_string(row.ancilla_formula),
                           std::string(t_expr) + " = " + std::to_string(row.t_formula));
        name_w = std::max(name_w, row.name.size());
        anc_w = std::max(anc_w, cells.back().first.size());
        t_w = std::max(t_w, cells.back().second.size());
    }
    const auto w = [](std::size_t width) { return std::setw(static_cast<int>(width + 2)); };

    std::ostringstream os;
    os << "adder comparison at n=" << n << "\n";
    os << std::left << w(name_w) << "adder" << w(anc_w) << "ancilla(formula)" << w(t_w) << "t_count(formula)"
       << std::right << std::setw(10) << "ancilla*" << std::setw(10) << "t_count*" << std::setw(9) << "d_anc"
       << std::setw(9) << "d_t" << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        os << std::left << w(name_w) << row.name << w(anc_w) << cells[i].first << w(t_w) << cells[i].second
           << std::right;
        if (row.ancilla_measured && row.t_measured) {
            const auto da = static_cast<std::int64_t>(*row.ancilla_measured) -
                            static_cast<std::int64_t>(row.ancilla_formula);
            const auto dt = static_cast<std::int64_t>(*row.t_measured) - static_cast<std::int64_t>(row.t_formula);
            os << std::setw(10) << *row.ancilla_measured << std::setw(10) << *row.t_measured << std::setw(9)
               << signed_delta(da) << std::setw(9) << signed_delta(dt);
        } else {
            os << std::setw(10) << "-" << std::setw(10) << "-" << std::setw(9) << "-" << std::setw(9) << "-";
        }
        os << "\n";
    }
    os << "* measured from synthesized circuits; d_* = measured - formula\n";
    return os.str();
}

} // namespace qadd
