// SPDX-License-Identifier: Apache-2.0

#include "qadd/circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <utility>

namespace qadd {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DuplicateOperand: return "DuplicateOperand";
    case ErrorCode::DanglingAnd: return "DanglingAnd";
    case ErrorCode::MismatchedAndDagger: return "MismatchedAndDagger";
    case ErrorCode::UnknownQubit: return "UnknownQubit";
    case ErrorCode::WidthZero: return "WidthZero";
    case ErrorCode::WidthTooSmall: return "WidthTooSmall";
    case ErrorCode::WidthTooLarge: return "WidthTooLarge";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::OperandCollision: return "OperandCollision";
    case ErrorCode::AndTargetNotZero: return "AndTargetNotZero";
    case ErrorCode::AndDaggerMismatch: return "AndDaggerMismatch";
    case ErrorCode::DirtyAncilla: return "DirtyAncilla";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownPass: return "UnknownPass";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "?";
}

Error::Error(ErrorCode code, std::string message, std::optional<std::size_t> gate_index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), gate_index_(gate_index) {}

std::string_view to_string(Register reg) {
    switch (reg) {
    case Register::data: return "data";
    case Register::ancilla: return "ancilla";
    case Register::control: return "control";
    }
    return "?";
}

std::string to_string(const QubitRef& q) {
    switch (q.reg) {
    case Register::data: return "b[" + std::to_string(q.index) + "]";
    case Register::ancilla: return "anc[" + std::to_string(q.index) + "]";
    case Register::control: return "ctl[" + std::to_string(q.index) + "]";
    }
    return "?";
}

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "x";
    case GateKind::CXClassical: return "cx_classical";
    case GateKind::CNOT: return "cnot";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::And: return "and";
    case GateKind::AndDagger: return "and_dagger";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Gate

Gate::Gate(GateKind kind, std::vector<QubitRef> operands, bool classical_bit)
    : kind_(kind), operands_(std::move(operands)), bit_(kind == GateKind::CXClassical && classical_bit) {
    // Malformed operand lists are kept as given so validate() can report them.
    if (arity(kind_) == 3 && operands_.size() == 3 && operands_[1] < operands_[0]) {
        std::swap(operands_[0], operands_[1]);
    }
}

Gate Gate::x(QubitRef target) { return Gate(GateKind::X, {target}); }
Gate Gate::cx_classical(bool bit, QubitRef target) { return Gate(GateKind::CXClassical, {target}, bit); }
Gate Gate::cnot(QubitRef control, QubitRef target) { return Gate(GateKind::CNOT, {control, target}); }
Gate Gate::toffoli(QubitRef c1, QubitRef c2, QubitRef target) { return Gate(GateKind::Toffoli, {c1, c2, target}); }
Gate Gate::and_gate(QubitRef c1, QubitRef c2, QubitRef target) { return Gate(GateKind::And, {c1, c2, target}); }
Gate Gate::and_dagger(QubitRef c1, QubitRef c2, QubitRef target) {
    return Gate(GateKind::AndDagger, {c1, c2, target});
}

std::span<const QubitRef> Gate::controls() const noexcept {
    if (operands_.empty()) {
        return {};
    }
    return std::span<const QubitRef>(operands_).first(operands_.size() - 1);
}

bool Gate::touches(const QubitRef& q) const noexcept {
    return std::find(operands_.begin(), operands_.end(), q) != operands_.end();
}

bool Gate::disjoint_from(const Gate& other) const noexcept {
    if (is_identity_slot() || other.is_identity_slot()) {
        return true;
    }
    return std::none_of(operands_.begin(), operands_.end(), [&](const QubitRef& q) { return other.touches(q); });
}

std::string to_string(const Gate& g) {
    std::ostringstream os;
    os << to_string(g.kind());
    if (g.kind() == GateKind::CXClassical) {
        os << '<' << (g.classical_bit() ? 1 : 0) << '>';
    }
    os << '(';
    const auto ops = g.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i != 0) {
            os << (i + 1 == ops.size() ? " -> " : ", ");
        }
        os << to_string(ops[i]);
    }
    os << ')';
    return os.str();
}

Gate inverse_of(const Gate& g) {
    const auto ops = g.operands();
    std::vector<QubitRef> operands(ops.begin(), ops.end());
    switch (g.kind()) {
    case GateKind::And: return Gate(GateKind::AndDagger, std::move(operands));
    case GateKind::AndDagger: return Gate(GateKind::And, std::move(operands));
    default: return g;
    }
}

// ---------------------------------------------------------------------------
// Variant / Constant

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::unoptimized: return "unoptimized";
    case Variant::optimized: return "optimized";
    case Variant::controlled: return "controlled";
    case Variant::baseline_cuccaro: return "baseline_cuccaro";
    case Variant::custom: return "custom";
    }
    return "?";
}

std::optional<Variant> variant_from_string(std::string_view name) {
    for (auto v : {Variant::unoptimized, Variant::optimized, Variant::controlled, Variant::baseline_cuccaro,
                   Variant::custom}) {
        if (to_string(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

std::uint64_t Constant::reduced() const noexcept {
    if (width >= 64) {
        return raw;
    }
    return raw & ((std::uint64_t{1} << width) - 1);
}

Constant normalize_constant(std::uint64_t a, std::uint32_t n) {
    if (n == 0) {
        throw Error(ErrorCode::WidthZero, "adder width must be at least 1");
    }
    if (n > kMaxWidth) {
        throw Error(ErrorCode::WidthTooLarge, "adder width " + std::to_string(n) + " exceeds " +
                                                  std::to_string(kMaxWidth));
    }
    Constant c;
    c.raw = a;
    c.width = n;
    const std::uint64_t r = c.reduced();
    if (r == 0) {
        c.shift = n;
        c.odd_part = 0;
        c.effective_width = 0;
        return c;
    }
    c.shift = static_cast<std::uint32_t>(std::countr_zero(r));
    c.odd_part = r >> c.shift;
    c.effective_width = n - c.shift;
    return c;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(std::uint32_t n_data, std::uint32_t n_ancilla, bool has_control, std::vector<Gate> gates,
                 Variant variant, std::optional<Constant> constant)
    : n_data_(n_data),
      n_ancilla_(n_ancilla),
      has_control_(has_control),
      gates_(std::move(gates)),
      variant_(variant),
      constant_(std::move(constant)) {}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
    return Circuit(n_data_, n_ancilla_, has_control_, std::move(gates), variant_, constant_);
}

bool Circuit::contains(const QubitRef& q) const noexcept {
    switch (q.reg) {
    case Register::data: return q.index < n_data_;
    case Register::ancilla: return q.index < n_ancilla_;
    case Register::control: return has_control_ && q.index == 0;
    }
    return false;
}

std::optional<ValidationIssue> validate(const Circuit& c) {
    using Controls = std::pair<QubitRef, QubitRef>;
    // target -> stack of (gate index, controls) of And gates not yet closed
    std::map<QubitRef, std::vector<std::pair<std::size_t, Controls>>> open;

    const auto gates = c.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        const auto ops = g.operands();
        if (ops.size() != arity(g.kind())) {
            return ValidationIssue{ErrorCode::ArityMismatch, i,
                                   std::string(to_string(g.kind())) + " takes " + std::to_string(arity(g.kind())) +
                                       " operands, got " + std::to_string(ops.size())};
        }
        for (const auto& q : ops) {
            if (!c.contains(q)) {
                return ValidationIssue{ErrorCode::UnknownQubit, i, to_string(q) + " is not declared"};
            }
        }
        for (std::size_t j = 0; j < ops.size(); ++j) {
            for (std::size_t k = j + 1; k < ops.size(); ++k) {
                if (ops[j] == ops[k]) {
                    return ValidationIssue{ErrorCode::DuplicateOperand, i, to_string(ops[j]) + " used twice"};
                }
            }
        }
        if (g.kind() == GateKind::And) {
            open[g.target()].emplace_back(i, Controls{ops[0], ops[1]});
        } else if (g.kind() == GateKind::AndDagger) {
            auto it = open.find(g.target());
            if (it == open.end() || it->second.empty()) {
                return ValidationIssue{ErrorCode::MismatchedAndDagger, i,
                                       "no open And on " + to_string(g.target())};
            }
            if (it->second.back().second != Controls{ops[0], ops[1]}) {
                return ValidationIssue{ErrorCode::MismatchedAndDagger, i,
                                       "controls differ from the And at gate " +
                                           std::to_string(it->second.back().first)};
            }
            it->second.pop_back();
        }
    }

    std::optional<std::size_t> first_open;
    for (const auto& [target, stack] : open) {
        for (const auto& [index, controls] : stack) {
            if (!first_open || index < *first_open) {
                first_open = index;
            }
        }
    }
    if (first_open) {
        return ValidationIssue{ErrorCode::DanglingAnd, *first_open, "And is never closed by an AndDagger"};
    }
    return std::nullopt;
}

void require_valid(const Circuit& c) {
    if (auto issue = validate(c)) {
        throw Error(issue->code, "gate " + std::to_string(issue->gate_index) + ": " + issue->message,
                    issue->gate_index);
    }
}

Circuit adjoint(const Circuit& c) {
    require_valid(c);
    std::vector<Gate> gates;
    gates.reserve(c.size());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        gates.push_back(inverse_of(*it));
    }
    return c.with_gates(std::move(gates));
}

Circuit concatenate(const Circuit& c, const Circuit& d) {
    if (c.n_data() != d.n_data() || c.has_control() != d.has_control()) {
        throw Error(ErrorCode::WidthMismatch, "circuits act on different registers");
    }
    std::vector<Gate> gates(c.gates().begin(), c.gates().end());
    gates.insert(gates.end(), d.gates().begin(), d.gates().end());
    return Circuit(c.n_data(), std::max(c.n_ancilla(), d.n_ancilla()), c.has_control(), std::move(gates),
                   Variant::custom);
}

} // namespace qadd
