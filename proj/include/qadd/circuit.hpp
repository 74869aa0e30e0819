// SPDX-License-Identifier: Apache-2.0

/// \file circuit.hpp
/// Intermediate representation for classical-reversible circuits: qubits
/// addressed by (register, index), the six primitive gates used by the
/// adders, and the structural checks every circuit must pass.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qadd {

enum class ErrorCode {
    // structural
    ArityMismatch,
    DuplicateOperand,
    DanglingAnd,
    MismatchedAndDagger,
    UnknownQubit,
    // synthesis
    WidthZero,
    WidthTooSmall,
    WidthTooLarge,
    WidthMismatch,
    OperandCollision,
    // simulation
    AndTargetNotZero,
    AndDaggerMismatch,
    DirtyAncilla,
    CapExceeded,
    // passes
    UnknownPass,
    // serialization
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code and, when it concerns a
/// particular gate, that gate's position in the circuit.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message, std::optional<std::size_t> gate_index = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> gate_index() const noexcept { return gate_index_; }

  private:
    ErrorCode code_;
    std::optional<std::size_t> gate_index_;
};

enum class Register : std::uint8_t { data, ancilla, control };

std::string_view to_string(Register reg);

struct QubitRef {
    Register reg = Register::data;
    std::uint32_t index = 0;

    static constexpr QubitRef data(std::uint32_t i) { return {Register::data, i}; }
    static constexpr QubitRef ancilla(std::uint32_t i) { return {Register::ancilla, i}; }
    static constexpr QubitRef control() { return {Register::control, 0}; }

    friend constexpr auto operator<=>(const QubitRef&, const QubitRef&) = default;
};

std::string to_string(const QubitRef& q);

enum class GateKind : std::uint8_t { X, CXClassical, CNOT, Toffoli, And, AndDagger };

std::string_view to_string(GateKind kind);

/// Number of operands a gate of this kind takes (targets last).
constexpr std::size_t arity(GateKind kind) {
    switch (kind) {
    case GateKind::X:
    case GateKind::CXClassical:
        return 1;
    case GateKind::CNOT:
        return 2;
    case GateKind::Toffoli:
    case GateKind::And:
    case GateKind::AndDagger:
        return 3;
    }
    return 0;
}

/// One primitive gate. Operands are stored controls first, target last; the
/// two controls of 3-qubit gates are kept in ascending order so that equal
/// gates compare equal regardless of how they were written.
class Gate {
  public:
    Gate(GateKind kind, std::vector<QubitRef> operands, bool classical_bit = false);

    static Gate x(QubitRef target);
    static Gate cx_classical(bool bit, QubitRef target);
    static Gate cnot(QubitRef control, QubitRef target);
    static Gate toffoli(QubitRef c1, QubitRef c2, QubitRef target);
    static Gate and_gate(QubitRef c1, QubitRef c2, QubitRef target);
    static Gate and_dagger(QubitRef c1, QubitRef c2, QubitRef target);

    GateKind kind() const noexcept { return kind_; }
    std::span<const QubitRef> operands() const noexcept { return operands_; }
    std::span<const QubitRef> controls() const noexcept;
    const QubitRef& target() const { return operands_.back(); }
    /// Only meaningful for CXClassical.
    bool classical_bit() const noexcept { return bit_; }

    /// A classically controlled X whose bit is 0: kept for census, elided on export.
    bool is_identity_slot() const noexcept { return kind_ == GateKind::CXClassical && !bit_; }
    bool touches(const QubitRef& q) const noexcept;
    /// True if the two gates share no qubit. Identity slots share nothing.
    bool disjoint_from(const Gate& other) const noexcept;

    friend bool operator==(const Gate&, const Gate&) = default;

  private:
    GateKind kind_;
    std::vector<QubitRef> operands_;
    bool bit_ = false;
};

std::string to_string(const Gate& g);

/// X, CX_classical, CNOT and Toffoli are self-inverse; And and AndDagger swap.
Gate inverse_of(const Gate& g);

enum class Variant : std::uint8_t { unoptimized, optimized, controlled, baseline_cuccaro, custom };

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);

/// A classical addend reduced modulo 2^width and split as odd_part * 2^shift.
struct Constant {
    std::uint64_t raw = 0;
    std::uint32_t width = 1;
    std::uint32_t shift = 0;
    std::uint64_t odd_part = 0;
    std::uint32_t effective_width = 0;

    /// raw mod 2^width
    std::uint64_t reduced() const noexcept;
    bool is_identity() const noexcept { return odd_part == 0; }
    /// Bit i of the odd part, i.e. a'_i in the shifted frame.
    bool bit(std::uint32_t i) const noexcept { return i < 64 && ((odd_part >> i) & 1U) != 0; }

    friend bool operator==(const Constant&, const Constant&) = default;
};

inline constexpr std::uint32_t kMaxWidth = 63;

/// Reduces a modulo 2^n and factors out trailing zeros. Throws WidthZero for
/// n = 0 and WidthTooLarge above kMaxWidth.
Constant normalize_constant(std::uint64_t a, std::uint32_t n);

struct ValidationIssue {
    ErrorCode code;
    std::size_t gate_index;
    std::string message;
};

class Circuit {
  public:
    Circuit(std::uint32_t n_data, std::uint32_t n_ancilla, bool has_control, std::vector<Gate> gates,
            Variant variant = Variant::custom, std::optional<Constant> constant = std::nullopt);

    std::uint32_t n_data() const noexcept { return n_data_; }
    std::uint32_t n_ancilla() const noexcept { return n_ancilla_; }
    bool has_control() const noexcept { return has_control_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }
    Variant variant() const noexcept { return variant_; }
    const std::optional<Constant>& constant() const noexcept { return constant_; }

    /// Copy of this circuit's registers and metadata with a different gate list.
    Circuit with_gates(std::vector<Gate> gates) const;

    bool contains(const QubitRef& q) const noexcept;

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    std::uint32_t n_data_;
    std::uint32_t n_ancilla_;
    bool has_control_;
    std::vector<Gate> gates_;
    Variant variant_;
    std::optional<Constant> constant_;
};

/// First violated structural rule, or nullopt if the circuit is well formed.
std::optional<ValidationIssue> validate(const Circuit& c);

/// Throws Error with the issue's code if validate() reports one.
void require_valid(const Circuit& c);

/// Gates reversed, And and AndDagger swapped.
Circuit adjoint(const Circuit& c);

/// c followed by d; both must have the same registers.
Circuit concatenate(const Circuit& c, const Circuit& d);

} // namespace qadd
