// SPDX-License-Identifier: Apache-2.0

/// \file resources.hpp
/// Gate census and T-count under the cost model {And pair: 4, Toffoli: 7,
/// Clifford: 0}, plus closed-form costs of known adders for comparison.
#pragma once

#include "qadd/circuit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qadd {

inline constexpr std::uint64_t kTPerAndPair = 4;
inline constexpr std::uint64_t kTPerToffoli = 7;

struct ExpectedCost {
    std::uint64_t ancilla = 0;
    std::uint64_t t_count = 0;

    friend bool operator==(const ExpectedCost&, const ExpectedCost&) = default;
};

struct ResourceReport {
    Variant variant = Variant::custom;
    std::uint32_t n = 0;
    std::optional<std::uint64_t> a;
    std::uint64_t ancilla = 0;
    std::uint64_t and_pairs = 0;
    std::uint64_t toffoli = 0;
    std::uint64_t cnot = 0;
    std::uint64_t x = 0;
    std::uint64_t cx_slots = 0;
    std::uint64_t cx_emitted = 0;
    std::uint64_t t_count = 0;
    std::optional<ExpectedCost> formula_expected;
    bool conforms = false;
};

/// Counts gates by kind. and_pairs is the number of And gates; validation
/// guarantees each has its AndDagger.
ResourceReport census(const Circuit& c);

enum class CostFormula : std::uint8_t {
    proposed_optimized,
    proposed_controlled,
    cuccaro_reference,
    draper_cla_reference,
    takahashi_reference,
    gidney_reference,
};

std::string_view to_string(CostFormula f);
/// Human-readable closed forms, e.g. {"n-3", "4n-5"}.
std::pair<std::string_view, std::string_view> formula_text(CostFormula f);

/// ceil(log2(n)) for n >= 1
std::uint64_t ceil_log2(std::uint64_t n);

/// Closed-form (ancilla, T-count). The proposed adders need n >= 4; the
/// reference rows n >= 1 (Draper needs the ancilla expression to stay
/// non-negative, which holds for n >= 1).
ExpectedCost expected_formulas(CostFormula f, std::uint32_t n);

struct ConformanceResult {
    bool conforms = false;
    /// field -> measured - expected, only for mismatched fields
    std::map<std::string, std::int64_t> diff;
};

ConformanceResult check_conformance(const ResourceReport& report, const ExpectedCost& expected);

/// census() plus the matching formula (if any) and its conformance. Formulas
/// are evaluated at the constant's effective width.
ResourceReport audit(const Circuit& c);

} // namespace qadd
