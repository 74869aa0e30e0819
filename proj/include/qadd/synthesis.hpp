// SPDX-License-Identifier: Apache-2.0

/// \file synthesis.hpp
/// Adder-by-constant circuits U|b> = |(a + b) mod 2^n>.
///
/// All synthesizers take a normalized Constant. The adder acts on the top
/// effective_width data qubits (indices shift..n-1); in the comments below
/// b_i denotes data[shift + i] and a_i the i-th bit of the odd part. The
/// carry into position i is c_i, with c_1 = b_0 because a_0 = 1.
#pragma once

#include "qadd/circuit.hpp"

#include <cstdint>
#include <vector>

namespace qadd {

/// floor((x + y + a) / 2)
constexpr bool maj_value(bool x, bool y, bool a) { return ((x != a) && (y != a)) != a; }

/// t <- MAJ(x, y, a_bit) with x and y restored; t must hold 0 beforehand.
/// Five classically controlled X slots and one Toffoli.
std::vector<Gate> maj_block(bool a_bit, QubitRef x, QubitRef y, QubitRef t);

/// Carry ladder recomputed per output bit, n_eff - 1 ancillas,
/// (n_eff - 1)(n_eff - 2) Toffolis. Requires effective_width >= 4.
Circuit synth_unoptimized(const Constant& c);

/// n_eff - 3 ancillas, n_eff - 3 And/AndDagger pairs, one Toffoli.
/// Requires effective_width >= 4.
Circuit synth_optimized(const Constant& c);

/// Controlled by a one-qubit control register; n_eff - 2 ancillas,
/// n_eff - 2 And pairs, n_eff - 1 Toffolis. Defined for every
/// effective_width >= 1 (below 3 it needs no ancilla).
Circuit synth_controlled(const Constant& c);

/// Ancilla-free adders for effective widths 1, 2 and 3.
Circuit synth_small(const Constant& c);

/// Normalizes a mod 2^n and dispatches. Identity constants give an empty
/// circuit. `controlled` (or variant == controlled) selects synth_controlled;
/// otherwise unoptimized/optimized, with widths below 4 routed to synth_small.
Circuit synth(std::uint64_t a, std::uint32_t n, Variant variant = Variant::optimized, bool controlled = false);

} // namespace qadd
