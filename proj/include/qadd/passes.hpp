// SPDX-License-Identifier: Apache-2.0

/// \file passes.hpp
/// Peephole rewrites over the circuit IR.
///
/// Two gates are treated as commuting iff they share no qubit (a slot with
/// bit 0 shares nothing). Each pass looks backwards from a gate across
/// commuting gates only, so every rewrite preserves the permutation.
#pragma once

#include "qadd/circuit.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qadd {

struct PassReport {
    std::string pass_name;
    std::size_t gates_before = 0;
    std::size_t gates_after = 0;
    std::size_t iterations_to_fixpoint = 0;
};

inline constexpr std::string_view kCancelInverses = "cancel-inverses";
inline constexpr std::string_view kMergeClassicalX = "merge-classical-x";

/// Removes pairs (g, inverse_of(g)) that become adjacent after moving g
/// back across gates disjoint from it. Runs to a fixpoint.
std::pair<Circuit, PassReport> cancel_adjacent_inverses(const Circuit& c);

/// Folds a classically controlled X into an adjacent slot or X on the same
/// qubit: X_x X_y -> X_{x^y}, X_x X -> X_{x^1}. Zero-bit slots are kept.
std::pair<Circuit, PassReport> merge_classical_x(const Circuit& c);

/// Registered pass names in a stable order.
std::vector<std::string> pass_names();

/// Applies the named passes in order, repeating the whole list until no pass
/// changes the circuit (at most gate-count rounds). Throws UnknownPass.
std::pair<Circuit, std::vector<PassReport>> run_pipeline(const Circuit& c, const std::vector<std::string>& passes);

} // namespace qadd
