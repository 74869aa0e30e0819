// SPDX-License-Identifier: Apache-2.0

#include "qadd/simulator.hpp"

#include <stdexcept>
#include <string>

namespace qadd {
namespace {

    constexpr std::uint64_t low_mask(std::uint32_t bits) {
        return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    }

} // namespace

Program::Program(const Circuit& c, bool require_balanced_and)
    : n_data_(c.n_data()), n_ancilla_(c.n_ancilla()), has_control_(c.has_control()) {
    if (auto issue = validate(c)) {
        const bool balance_only =
            issue->code == ErrorCode::DanglingAnd || issue->code == ErrorCode::MismatchedAndDagger;
        if (require_balanced_and || !balance_only) {
            require_valid(c);
        }
    }
    if (n_data_ + n_ancilla_ + (has_control_ ? 1 : 0) > 64) {
        throw Error(ErrorCode::CapExceeded, "circuit needs more than 64 qubits");
    }
    auto bit_of = [&](const QubitRef& q) -> std::uint64_t {
        switch (q.reg) {
        case Register::data: return std::uint64_t{1} << q.index;
        case Register::ancilla: return std::uint64_t{1} << (n_data_ + q.index);
        case Register::control: return std::uint64_t{1} << (n_data_ + n_ancilla_);
        }
        return 0;
    };
    ops_.reserve(c.size());
    for (const Gate& g : c.gates()) {
        if (g.is_identity_slot()) {
            ops_.push_back({GateKind::CXClassical, 0, 0});
            continue;
        }
        std::uint64_t controls = 0;
        for (const auto& q : g.controls()) {
            controls |= bit_of(q);
        }
        ops_.push_back({g.kind(), controls, bit_of(g.target())});
    }
}

std::uint64_t Program::pack(const BasisState& s) const {
    std::uint64_t w = s.data & low_mask(n_data_);
    w |= (s.ancilla & low_mask(n_ancilla_)) << n_data_;
    if (has_control_ && s.control) {
        w |= std::uint64_t{1} << (n_data_ + n_ancilla_);
    }
    return w;
}

BasisState Program::unpack(std::uint64_t w) const {
    BasisState s;
    s.data = w & low_mask(n_data_);
    s.ancilla = n_ancilla_ == 0 ? 0 : (w >> n_data_) & low_mask(n_ancilla_);
    s.control = has_control_ && ((w >> (n_data_ + n_ancilla_)) & 1U) != 0;
    return s;
}

BasisState Program::execute(BasisState s) const {
    std::uint64_t w = pack(s);
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        const bool fire = (w & op.controls) == op.controls;
        switch (op.kind) {
        case GateKind::X:
        case GateKind::CXClassical:
            w ^= op.target;
            break;
        case GateKind::CNOT:
        case GateKind::Toffoli:
            if (fire) {
                w ^= op.target;
            }
            break;
        case GateKind::And:
            if ((w & op.target) != 0) {
                throw Error(ErrorCode::AndTargetNotZero, "gate " + std::to_string(i) + ": And target is |1>", i);
            }
            if (fire) {
                w |= op.target;
            }
            break;
        case GateKind::AndDagger:
            if (((w & op.target) != 0) != fire) {
                throw Error(ErrorCode::AndDaggerMismatch,
                            "gate " + std::to_string(i) + ": AndDagger target differs from control conjunction", i);
            }
            w &= ~op.target;
            break;
        }
    }
    return unpack(w);
}

BasisState Program::run(BasisState s) const {
    if ((s.ancilla & low_mask(n_ancilla_)) != 0) {
        throw Error(ErrorCode::DirtyAncilla, "ancillas must start in |0>");
    }
    BasisState out = execute(s);
    if (out.ancilla != 0) {
        throw Error(ErrorCode::DirtyAncilla, "ancillas not returned to |0> (state " + std::to_string(out.ancilla) + ")");
    }
    return out;
}

BasisState apply_gate(const Circuit& c, BasisState s, const Gate& g) {
    return Program(c.with_gates({g}), false).execute(s);
}

BasisState run(const Circuit& c, BasisState input) { return Program(c).run(input); }

PermutationTable permutation_table(const Circuit& c, std::uint32_t cap) {
    const std::uint32_t bits = c.n_data() + (c.has_control() ? 1 : 0);
    if (bits > cap) {
        throw Error(ErrorCode::CapExceeded,
                    std::to_string(bits) + " input bits exceeds the table cap of " + std::to_string(cap));
    }
    const Program program(c);
    const std::uint64_t count = std::uint64_t{1} << bits;
    const std::uint64_t data_mask = low_mask(c.n_data());
    PermutationTable table(count);
    std::vector<bool> seen(count, false);
    for (std::uint64_t in = 0; in < count; ++in) {
        const BasisState out = program.run({in & data_mask, 0, c.has_control() && (in >> c.n_data()) != 0});
        const std::uint64_t packed = out.data | (out.control ? std::uint64_t{1} << c.n_data() : 0);
        if (seen[packed]) {
            // unreachable for the reversible gate set
            throw std::logic_error("permutation_table: output " + std::to_string(packed) + " produced twice");
        }
        seen[packed] = true;
        table[in] = packed;
    }
    return table;
}

std::optional<Counterexample> assert_equivalent(const Circuit& c1, const Circuit& c2, std::uint32_t cap) {
    if (c1.n_data() != c2.n_data() || c1.has_control() != c2.has_control()) {
        throw Error(ErrorCode::WidthMismatch, "circuits act on different data/control registers");
    }
    const auto t1 = permutation_table(c1, cap);
    const auto t2 = permutation_table(c2, cap);
    for (std::uint64_t in = 0; in < t1.size(); ++in) {
        if (t1[in] != t2[in]) {
            return Counterexample{in, t1[in], t2[in]};
        }
    }
    return std::nullopt;
}

} // namespace qadd
