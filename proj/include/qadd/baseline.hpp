// SPDX-License-Identifier: Apache-2.0

/// \file baseline.hpp
/// The conventional route to an adder-by-constant: load the constant into a
/// scratch register with X gates, run an in-place quantum-quantum adder,
/// unload the constant.
#pragma once

#include "qadd/circuit.hpp"
#include "qadd/resources.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qadd {

/// In-place b <- a + b mod 2^n, Cuccaro MAJ/UMA ripple with plain Toffolis.
///
/// Register layout: b on data[0..n), the addend a on ancilla[0..n) and a
/// carry-in held at 0 on ancilla[n]. The top sum bit is produced with two
/// CNOTs instead of a MAJ/UMA pair, giving 2n-2 Toffolis for n >= 2.
Circuit synth_cuccaro_mod(std::uint32_t n);

/// Wraps a two-register adder (addend on ancilla[0..n)) with X gates that
/// load and unload `a`, turning the addend register into clean ancillas.
/// Throws WidthMismatch if the adder has fewer than n ancillas.
Circuit reduce_to_constant(const Circuit& adder, std::uint64_t a);

struct ComparisonRow {
    std::string name;
    CostFormula formula;
    std::uint64_t ancilla_formula = 0;
    std::uint64_t t_formula = 0;
    std::optional<std::uint64_t> ancilla_measured;
    std::optional<std::uint64_t> t_measured;
};

/// All five rows of the adder comparison at width n (n >= 4). Measured values
/// are filled for the wrapped Cuccaro baseline and the proposed optimized
/// adder, both synthesized for `a` (T-counts do not depend on it).
std::vector<ComparisonRow> comparison_table(std::uint32_t n, std::uint64_t a = 1);

} // namespace qadd
