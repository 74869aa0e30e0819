// SPDX-License-Identifier: Apache-2.0

#include "qadd/baseline.hpp"

#include "qadd/synthesis.hpp"

#include <string>

namespace qadd {

Circuit synth_cuccaro_mod(std::uint32_t n) {
    if (n == 0) {
        throw Error(ErrorCode::WidthZero, "adder width must be at least 1");
    }
    if (n > kMaxWidth / 2) {
        throw Error(ErrorCode::WidthTooLarge, "baseline adder needs 2n+1 qubits; width too large");
    }
    auto b = [](std::uint32_t i) { return QubitRef::data(i); };
    auto a = [](std::uint32_t i) { return QubitRef::ancilla(i); };
    const QubitRef carry_in = QubitRef::ancilla(n);

    std::vector<Gate> gates;
    if (n == 1) {
        gates.push_back(Gate::cnot(a(0), b(0)));
        return Circuit(n, n + 1, false, std::move(gates), Variant::baseline_cuccaro);
    }

    // MAJ(c, b, a): a ends holding the carry out of this position.
    auto maj = [&](QubitRef c, QubitRef bi, QubitRef ai) {
        gates.push_back(Gate::cnot(ai, bi));
        gates.push_back(Gate::cnot(ai, c));
        gates.push_back(Gate::toffoli(c, bi, ai));
    };
    // UMA(c, b, a): restores a and c, leaves the sum bit in b.
    auto uma = [&](QubitRef c, QubitRef bi, QubitRef ai) {
        gates.push_back(Gate::toffoli(c, bi, ai));
        gates.push_back(Gate::cnot(ai, c));
        gates.push_back(Gate::cnot(c, bi));
    };
    auto carry_wire = [&](std::uint32_t i) { return i == 0 ? carry_in : a(i - 1); };

    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        maj(carry_wire(i), b(i), a(i));
    }
    gates.push_back(Gate::cnot(a(n - 1), b(n - 1)));
    gates.push_back(Gate::cnot(a(n - 2), b(n - 1)));
    for (std::uint32_t i = n - 1; i-- > 0;) {
        uma(carry_wire(i), b(i), a(i));
    }
    return Circuit(n, n + 1, false, std::move(gates), Variant::baseline_cuccaro);
}

Circuit reduce_to_constant(const Circuit& adder, std::uint64_t a) {
    const std::uint32_t n = adder.n_data();
    if (adder.n_ancilla() < n || adder.has_control()) {
        throw Error(ErrorCode::WidthMismatch, "adder must provide an uncontrolled addend register of width " +
                                                  std::to_string(n) + " on its ancillas");
    }
    const Constant c = normalize_constant(a, n);
    std::vector<Gate> load;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (((c.reduced() >> i) & 1U) != 0) {
            load.push_back(Gate::x(QubitRef::ancilla(i)));
        }
    }
    std::vector<Gate> gates = load;
    gates.insert(gates.end(), adder.gates().begin(), adder.gates().end());
    gates.insert(gates.end(), load.rbegin(), load.rend());
    return Circuit(n, adder.n_ancilla(), false, std::move(gates), adder.variant(), c);
}

std::vector<ComparisonRow> comparison_table(std::uint32_t n, std::uint64_t a) {
    if (n < 4) {
        throw Error(ErrorCode::WidthTooSmall, "comparison table needs n >= 4");
    }
    auto row = [n](std::string name, CostFormula f) {
        const ExpectedCost e = expected_formulas(f, n);
        return ComparisonRow{std::move(name), f, e.ancilla, e.t_count, std::nullopt, std::nullopt};
    };

    std::vector<ComparisonRow> rows{
        row("Cuccaro RCA", CostFormula::cuccaro_reference),
        row("Draper CLA", CostFormula::draper_cla_reference),
        row("Takahashi RCA", CostFormula::takahashi_reference),
        row("Gidney RCA", CostFormula::gidney_reference),
        row("Proposed", CostFormula::proposed_optimized),
    };

    const ResourceReport cuccaro = census(reduce_to_constant(synth_cuccaro_mod(n), a));
    rows[0].ancilla_measured = cuccaro.ancilla;
    rows[0].t_measured = cuccaro.t_count;

    // Full-width odd constant so the proposed adder uses all n qubits.
    const std::uint64_t odd = normalize_constant(a, n).reduced() | 1U;
    const ResourceReport proposed = census(synth(odd, n, Variant::optimized));
    rows[4].ancilla_measured = proposed.ancilla;
    rows[4].t_measured = proposed.t_count;
    return rows;
}

} // namespace qadd
