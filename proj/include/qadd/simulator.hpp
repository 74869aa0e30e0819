// SPDX-License-Identifier: Apache-2.0

/// \file simulator.hpp
/// Basis-state semantics. Every gate in the IR permutes computational basis
/// states, so a state is just a few machine words and agreement on all basis
/// inputs implies equality of the unitaries.
#pragma once

#include "qadd/circuit.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qadd {

struct BasisState {
    std::uint64_t data = 0;
    std::uint64_t ancilla = 0;
    bool control = false;

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// A validated circuit lowered to bit masks over one flat word
/// (data bits, then ancilla bits, then the control bit). Immutable, so one
/// program can be shared by concurrent sweeps.
class Program {
  public:
    /// With `require_balanced_and` false, unmatched And/AndDagger gates are
    /// accepted (single-gate application); other structural errors still throw.
    explicit Program(const Circuit& c, bool require_balanced_and = true);

    /// Applies every gate, enforcing the And/AndDagger preconditions. Does
    /// not look at ancilla cleanliness.
    BasisState execute(BasisState s) const;

    /// execute() plus the adder contract: ancillas must enter and leave at 0.
    BasisState run(BasisState s) const;

    std::uint32_t n_data() const noexcept { return n_data_; }
    std::uint32_t n_ancilla() const noexcept { return n_ancilla_; }
    bool has_control() const noexcept { return has_control_; }

  private:
    struct Op {
        GateKind kind;
        std::uint64_t controls;
        std::uint64_t target;
    };

    std::uint64_t pack(const BasisState& s) const;
    BasisState unpack(std::uint64_t w) const;

    std::uint32_t n_data_;
    std::uint32_t n_ancilla_;
    bool has_control_;
    std::vector<Op> ops_;
};

BasisState apply_gate(const Circuit& c, BasisState s, const Gate& g);

BasisState run(const Circuit& c, BasisState input);

/// Input index is data | control << n_data; so is each entry.
using PermutationTable = std::vector<std::uint64_t>;

inline constexpr std::uint32_t kDefaultTableCap = 20;

/// Runs every basis input over the data (and control) register. Throws
/// CapExceeded above `cap` input bits and AndDaggerMismatch-style errors
/// from run(); the result is checked to be a bijection.
PermutationTable permutation_table(const Circuit& c, std::uint32_t cap = kDefaultTableCap);

struct Counterexample {
    std::uint64_t input;
    std::uint64_t left;
    std::uint64_t right;
};

/// nullopt iff both circuits induce the same permutation; otherwise the
/// least input on which they differ.
std::optional<Counterexample> assert_equivalent(const Circuit& c1, const Circuit& c2,
                                                std::uint32_t cap = kDefaultTableCap);

} // namespace qadd
