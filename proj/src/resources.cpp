// SPDX-License-Identifier: Apache-2.0

#include "qadd/resources.hpp"

#include <bit>

namespace qadd {

ResourceReport census(const Circuit& c) {
    require_valid(c);
    ResourceReport r;
    r.variant = c.variant();
    r.n = c.n_data();
    if (c.constant()) {
        r.a = c.constant()->raw;
    }
    r.ancilla = c.n_ancilla();
    for (const Gate& g : c.gates()) {
        switch (g.kind()) {
        case GateKind::X: ++r.x; break;
        case GateKind::CXClassical:
            ++r.cx_slots;
            if (g.classical_bit()) {
                ++r.cx_emitted;
            }
            break;
        case GateKind::CNOT: ++r.cnot; break;
        case GateKind::Toffoli: ++r.toffoli; break;
        case GateKind::And: ++r.and_pairs; break;
        case GateKind::AndDagger: break;
        }
    }
    r.t_count = kTPerAndPair * r.and_pairs + kTPerToffoli * r.toffoli;
    return r;
}

std::string_view to_string(CostFormula f) {
    switch (f) {
    case CostFormula::proposed_optimized: return "proposed_optimized";
    case CostFormula::proposed_controlled: return "proposed_controlled";
    case CostFormula::cuccaro_reference: return "cuccaro_reference";
    case CostFormula::draper_cla_reference: return "draper_cla_reference";
    case CostFormula::takahashi_reference: return "takahashi_reference";
    case CostFormula::gidney_reference: return "gidney_reference";
    }
    return "?";
}

std::pair<std::string_view, std::string_view> formula_text(CostFormula f) {
    switch (f) {
    case CostFormula::proposed_optimized: return {"n-3", "4n-5"};
    case CostFormula::proposed_controlled: return {"n-2", "11n-15"};
    case CostFormula::cuccaro_reference: return {"n+1", "14n-21"};
    case CostFormula::draper_cla_reference: return {"2n-2ceil(log2 n)-1", "70n-84ceil(log2 n)-42"};
    case CostFormula::takahashi_reference: return {"n", "14n-7"};
    case CostFormula::gidney_reference: return {"2n-1", "4n-4"};
    }
    return {"?", "?"};
}

std::uint64_t ceil_log2(std::uint64_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

ExpectedCost expected_formulas(CostFormula f, std::uint32_t n) {
    const bool proposed = f == CostFormula::proposed_optimized || f == CostFormula::proposed_controlled;
    if (n < (proposed ? 4U : 1U)) {
        throw Error(ErrorCode::WidthTooSmall, std::string(to_string(f)) + " formula needs n >= " +
                                                  (proposed ? "4" : "1") + ", got " + std::to_string(n));
    }
    const std::int64_t w = n;
    const std::int64_t lg = static_cast<std::int64_t>(ceil_log2(n));
    auto cost = [](std::int64_t ancilla, std::int64_t t) {
        if (ancilla < 0 || t < 0) {
            throw Error(ErrorCode::WidthTooSmall, "formula is negative at this width");
        }
        return ExpectedCost{static_cast<std::uint64_t>(ancilla), static_cast<std::uint64_t>(t)};
    };
    switch (f) {
    case CostFormula::proposed_optimized: return cost(w - 3, 4 * w - 5);
    case CostFormula::proposed_controlled: return cost(w - 2, 11 * w - 15);
    case CostFormula::cuccaro_reference: return cost(w + 1, 14 * w - 21);
    case CostFormula::draper_cla_reference: return cost(2 * w - 2 * lg - 1, 70 * w - 84 * lg - 42);
    case CostFormula::takahashi_reference: return cost(w, 14 * w - 7);
    case CostFormula::gidney_reference: return cost(2 * w - 1, 4 * w - 4);
    }
    return {};
}

ConformanceResult check_conformance(const ResourceReport& report, const ExpectedCost& expected) {
    ConformanceResult result;
    auto compare = [&](const char* field, std::uint64_t measured, std::uint64_t want) {
        if (measured != want) {
            result.diff[field] = static_cast<std::int64_t>(measured) - static_cast<std::int64_t>(want);
        }
    };
    compare("ancilla", report.ancilla, expected.ancilla);
    compare("t_count", report.t_count, expected.t_count);
    result.conforms = result.diff.empty();
    return result;
}

ResourceReport audit(const Circuit& c) {
    ResourceReport r = census(c);
    const auto& constant = c.constant();
    if (!constant || constant->is_identity() || constant->effective_width < 4) {
        return r;
    }
    std::optional<CostFormula> formula;
    if (c.variant() == Variant::optimized) {
        formula = CostFormula::proposed_optimized;
    } else if (c.variant() == Variant::controlled) {
        formula = CostFormula::proposed_controlled;
    }
    if (formula) {
        r.formula_expected = expected_formulas(*formula, constant->effective_width);
        r.conforms = check_conformance(r, *r.formula_expected).conforms;
    }
    return r;
}

} // namespace qadd
