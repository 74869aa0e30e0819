// SPDX-License-Identifier: Apache-2.0

#include "qadd/synthesis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qadd {
namespace {

    // Qubit naming in the shifted frame of a constant.
    struct Frame {
        std::uint32_t shift;

        QubitRef b(std::uint32_t i) const { return QubitRef::data(shift + i); }
        // C_1 = b_0, C_{i+1} = t_i held on ancilla i - 1.
        QubitRef carry(std::uint32_t i) const { return i == 1 ? b(0) : QubitRef::ancilla(i - 2); }
    };

    // Appends gates, folding a classically controlled X into the nearest
    // earlier slot on the same qubit when nothing in between touches it.
    class ScheduleBuilder {
      public:
        void push(Gate g) { gates_.push_back(std::move(g)); }

        void slot(bool bit, QubitRef q) {
            for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
                if (!it->touches(q)) {
                    continue;
                }
                if (it->kind() == GateKind::CXClassical) {
                    *it = Gate::cx_classical(it->classical_bit() != bit, q);
                    return;
                }
                break;
            }
            gates_.push_back(Gate::cx_classical(bit, q));
        }

        std::vector<Gate> take() && { return std::move(gates_); }

      private:
        std::vector<Gate> gates_;
    };

    void require_odd(const Constant& c, const char* who) {
        if (c.is_identity()) {
            throw Error(ErrorCode::WidthMismatch, std::string(who) + ": constant is 0 mod 2^n; use synth()");
        }
    }

    void require_width_at_least_4(const Constant& c, const char* who) {
        require_odd(c, who);
        if (c.effective_width < 4) {
            throw Error(ErrorCode::WidthTooSmall, std::string(who) + " needs effective width >= 4, got " +
                                                      std::to_string(c.effective_width));
        }
    }

} // namespace

std::vector<Gate> maj_block(bool a_bit, QubitRef x, QubitRef y, QubitRef t) {
    if (t == x || t == y || x == y) {
        throw Error(ErrorCode::OperandCollision, "MAJ block operands must be three distinct qubits");
    }
    return {
        Gate::cx_classical(a_bit, x), Gate::cx_classical(a_bit, y), Gate::toffoli(x, y, t),
        Gate::cx_classical(a_bit, x), Gate::cx_classical(a_bit, y), Gate::cx_classical(a_bit, t),
    };
}

Circuit synth_unoptimized(const Constant& c) {
    require_width_at_least_4(c, "synth_unoptimized");
    const std::uint32_t n = c.effective_width;
    const Frame f{c.shift};
    // u_k lives on ancilla k - 1
    auto u = [](std::uint32_t k) { return QubitRef::ancilla(k - 1); };

    std::vector<Gate> gates;
    for (std::uint32_t i = n - 1; i >= 1; --i) {
        std::vector<Gate> ladder{Gate::cnot(f.b(0), u(1))};
        for (std::uint32_t j = 2; j <= i; ++j) {
            auto block = maj_block(c.bit(j - 1), f.b(j - 1), u(j - 1), u(j));
            ladder.insert(ladder.end(), block.begin(), block.end());
        }
        gates.insert(gates.end(), ladder.begin(), ladder.end());
        gates.push_back(Gate::cnot(u(i), f.b(i)));
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            gates.push_back(inverse_of(*it));
        }
        gates.push_back(Gate::cx_classical(c.bit(i), f.b(i)));
    }
    gates.push_back(Gate::x(f.b(0)));
    return Circuit(c.width, n - 1, false, std::move(gates), Variant::unoptimized, c);
}

namespace {

    // Shared by synth_optimized (n >= 4) and synth_small (n == 3). The last
    // carry is never stored: the Toffoli of level n-2 targets b_{n-1}.
    std::vector<Gate> optimized_schedule(const Constant& c) {
        const std::uint32_t n = c.effective_width;
        const Frame f{c.shift};
        ScheduleBuilder s;

        for (std::uint32_t i = 1; i + 3 <= n; ++i) {
            s.slot(c.bit(i), f.b(i));
            s.slot(c.bit(i), f.carry(i));
            s.push(Gate::and_gate(f.b(i), f.carry(i), f.carry(i + 1)));
            s.slot(c.bit(i), f.carry(i + 1));
        }

        const std::uint32_t top = n - 2;
        s.slot(c.bit(top), f.b(top));
        s.slot(c.bit(top), f.carry(top));
        s.push(Gate::toffoli(f.b(top), f.carry(top), f.b(n - 1)));
        s.slot(c.bit(top) != c.bit(n - 1), f.b(n - 1));
        s.push(Gate::cnot(f.carry(top), f.b(top)));
        s.slot(c.bit(top), f.b(top));
        s.slot(c.bit(top), f.carry(top));

        for (std::uint32_t i = n - 3; i >= 1 && i + 3 <= n; --i) {
            s.slot(c.bit(i), f.carry(i + 1));
            s.push(Gate::and_dagger(f.b(i), f.carry(i), f.carry(i + 1)));
            s.push(Gate::cnot(f.carry(i), f.b(i)));
            s.slot(c.bit(i), f.b(i));
            s.slot(c.bit(i), f.carry(i));
        }

        s.push(Gate::x(f.b(0)));
        return std::move(s).take();
    }

} // namespace

Circuit synth_optimized(const Constant& c) {
    require_width_at_least_4(c, "synth_optimized");
    return Circuit(c.width, c.effective_width - 3, false, optimized_schedule(c), Variant::optimized, c);
}

Circuit synth_controlled(const Constant& c) {
    require_odd(c, "synth_controlled");
    const std::uint32_t n = c.effective_width;
    const Frame f{c.shift};
    const QubitRef g = QubitRef::control();
    ScheduleBuilder s;

    // Data targets get the control; ancilla targets stay classical.
    auto toggle = [&](bool bit, QubitRef q) {
        if (q.reg == Register::data) {
            if (bit) {
                s.push(Gate::cnot(g, q));
            }
        } else {
            s.slot(bit, q);
        }
    };

    if (n >= 2) {
        for (std::uint32_t i = 1; i + 2 <= n; ++i) {
            toggle(c.bit(i), f.b(i));
            toggle(c.bit(i), f.carry(i));
            s.push(Gate::and_gate(f.b(i), f.carry(i), f.carry(i + 1)));
            toggle(c.bit(i), f.carry(i + 1));
        }

        s.push(Gate::toffoli(g, f.carry(n - 1), f.b(n - 1)));
        toggle(c.bit(n - 1), f.b(n - 1));

        for (std::uint32_t i = n - 2; i >= 1 && i + 2 <= n; --i) {
            toggle(c.bit(i), f.carry(i + 1));
            s.push(Gate::and_dagger(f.b(i), f.carry(i), f.carry(i + 1)));
            s.push(Gate::toffoli(g, f.carry(i), f.b(i)));
            toggle(c.bit(i), f.b(i));
            toggle(c.bit(i), f.carry(i));
        }
    }

    s.push(Gate::cnot(g, f.b(0)));
    return Circuit(c.width, n >= 2 ? n - 2 : 0, true, std::move(s).take(), Variant::controlled, c);
}

Circuit synth_small(const Constant& c) {
    require_odd(c, "synth_small");
    const std::uint32_t n = c.effective_width;
    const Frame f{c.shift};
    std::vector<Gate> gates;
    switch (n) {
    case 1:
        gates = {Gate::x(f.b(0))};
        break;
    case 2:
        gates = {Gate::cnot(f.b(0), f.b(1)), Gate::cx_classical(c.bit(1), f.b(1)), Gate::x(f.b(0))};
        break;
    case 3:
        gates = optimized_schedule(c);
        break;
    default:
        throw Error(ErrorCode::WidthMismatch,
                    "synth_small handles effective widths 1..3, got " + std::to_string(n));
    }
    return Circuit(c.width, 0, false, std::move(gates), Variant::optimized, c);
}

Circuit synth(std::uint64_t a, std::uint32_t n, Variant variant, bool controlled) {
    const Constant c = normalize_constant(a, n);
    if (variant == Variant::controlled) {
        controlled = true;
    }
    if (variant != Variant::unoptimized && variant != Variant::optimized && variant != Variant::controlled) {
        throw std::invalid_argument("synth: variant " + std::string(to_string(variant)) +
                                    " is not built by the synthesis module");
    }
    const Variant tag = controlled ? Variant::controlled : variant;
    if (c.is_identity()) {
        return Circuit(n, 0, controlled, {}, tag, c);
    }
    if (controlled) {
        return synth_controlled(c);
    }
    if (c.effective_width < 4) {
        const Circuit small = synth_small(c);
        return Circuit(small.n_data(), small.n_ancilla(), false, {small.gates().begin(), small.gates().end()}, tag,
                       c);
    }
    return variant == Variant::unoptimized ? synth_unoptimized(c) : synth_optimized(c);
}

} // namespace qadd
