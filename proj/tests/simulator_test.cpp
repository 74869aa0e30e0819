// SPDX-License-Identifier: Apache-2.0

#include "qadd/simulator.hpp"
#include "qadd/synthesis.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace qadd;

namespace {

const QubitRef d0 = QubitRef::data(0);
const QubitRef d1 = QubitRef::data(1);
const QubitRef d2 = QubitRef::data(2);
const QubitRef t0 = QubitRef::ancilla(0);

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::ParseError;
}

} // namespace

TEST(ApplyGate, Examples) {
    const Circuit host(3, 1, false, {});
    EXPECT_EQ(apply_gate(host, {0b011, 0, false}, Gate::toffoli(d0, d1, d2)).data, 0b111U);
    EXPECT_EQ(apply_gate(host, {0b001, 0, false}, Gate::and_gate(d0, d1, t0)).ancilla, 0U);
    EXPECT_EQ(apply_gate(host, {0b011, 0, false}, Gate::and_gate(d0, d1, t0)).ancilla, 1U);
    EXPECT_EQ(apply_gate(host, {0b010, 0, false}, Gate::cx_classical(false, d1)).data, 0b010U);
    EXPECT_EQ(apply_gate(host, {0b010, 0, false}, Gate::cx_classical(true, d1)).data, 0b000U);
}

TEST(ApplyGate, AndOnSetTarget) {
    const Circuit host(3, 1, false, {});
    EXPECT_EQ(code_of([&] { apply_gate(host, {0b011, 1, false}, Gate::and_gate(d0, d1, t0)); }),
              ErrorCode::AndTargetNotZero);
}

TEST(ApplyGate, AndDaggerMismatch) {
    const Circuit host(3, 1, false, {});
    EXPECT_EQ(code_of([&] { apply_gate(host, {0b001, 1, false}, Gate::and_dagger(d0, d1, t0)); }),
              ErrorCode::AndDaggerMismatch);
    EXPECT_EQ(apply_gate(host, {0b011, 1, false}, Gate::and_dagger(d0, d1, t0)).ancilla, 0U);
}

TEST(Run, Examples) {
    EXPECT_EQ(run(Circuit(4, 0, false, {}), {9, 0, false}).data, 9U);
    EXPECT_EQ(run(synth_optimized(normalize_constant(3, 4)), {5, 0, false}).data, 8U);
    const Circuit c = synth_controlled(normalize_constant(5, 4));
    EXPECT_EQ(run(c, {7, 0, true}).data, 12U);
    EXPECT_EQ(run(c, {7, 0, false}).data, 7U);
}

TEST(Run, DirtyAncillaAtEnd) {
    const Circuit c(2, 1, false, {Gate::toffoli(d0, d1, t0)});
    EXPECT_EQ(run(c, {0b01, 0, false}).data, 0b01U);
    EXPECT_EQ(code_of([&] { run(c, {0b11, 0, false}); }), ErrorCode::DirtyAncilla);
}

TEST(Run, DirtyAncillaAtInput) {
    EXPECT_EQ(code_of([&] { run(Circuit(1, 1, false, {}), {0, 1, false}); }), ErrorCode::DirtyAncilla);
}

TEST(Run, RejectsInvalidCircuit) {
    EXPECT_EQ(code_of([&] { run(Circuit(2, 1, false, {Gate::and_gate(d0, d1, t0)}), {0, 0, false}); }),
              ErrorCode::DanglingAnd);
}

TEST(Run, AndDisciplineErrorsSurface) {
    // the And target is already set by the preceding X
    const Circuit c(2, 1, false, {Gate::x(t0), Gate::and_gate(d0, d1, t0), Gate::and_dagger(d0, d1, t0), Gate::x(t0)});
    EXPECT_EQ(code_of([&] { run(c, {0, 0, false}); }), ErrorCode::AndTargetNotZero);
}

TEST(Execute, DoesNotCheckAncillas) {
    const Circuit c(2, 1, false, {Gate::toffoli(d0, d1, t0)});
    EXPECT_EQ(Program(c).execute({0b11, 0, false}).ancilla, 1U);
}

TEST(PermutationTable, IncrementModFour) {
    EXPECT_EQ(permutation_table(synth(1, 2)), (PermutationTable{1, 2, 3, 0}));
}

TEST(PermutationTable, MatchesOracleAtSix) {
    for (std::uint64_t a : oracle::odd_constants(6)) {
        const auto table = permutation_table(synth(a, 6));
        for (std::uint64_t b = 0; b < 64; ++b) {
            ASSERT_EQ(table[b], oracle::add_mod(a, b, 6));
        }
    }
}

TEST(PermutationTable, IncludesControlBit) {
    const auto table = permutation_table(synth(3, 3, Variant::controlled));
    ASSERT_EQ(table.size(), 16U);
    for (std::uint64_t b = 0; b < 8; ++b) {
        EXPECT_EQ(table[b], b);
        EXPECT_EQ(table[b | 8], oracle::add_mod(3, b, 3) | 8);
    }
}

TEST(PermutationTable, AlwaysABijection) {
    for (std::uint32_t n = 1; n <= 7; ++n) {
        for (Variant v : {Variant::unoptimized, Variant::optimized, Variant::controlled}) {
            const auto table = permutation_table(synth(0x55 & oracle::mask(n), n, v));
            EXPECT_EQ(std::set<std::uint64_t>(table.begin(), table.end()).size(), table.size());
        }
    }
}

TEST(PermutationTable, CapExceeded) {
    EXPECT_EQ(code_of([] { permutation_table(synth(1, 21)); }), ErrorCode::CapExceeded);
    EXPECT_EQ(code_of([] { permutation_table(synth(1, 20, Variant::controlled)); }), ErrorCode::CapExceeded);
    EXPECT_EQ(code_of([] { permutation_table(synth(1, 8), 7); }), ErrorCode::CapExceeded);
}

TEST(AssertEquivalent, Examples) {
    const Circuit c = synth_optimized(normalize_constant(3, 4));
    EXPECT_FALSE(assert_equivalent(c, c).has_value());
    EXPECT_FALSE(assert_equivalent(synth_unoptimized(normalize_constant(5, 5)), synth_optimized(normalize_constant(5, 5)))
                     .has_value());
    const auto cex = assert_equivalent(c, synth_optimized(normalize_constant(5, 4)));
    ASSERT_TRUE(cex.has_value());
    EXPECT_EQ(cex->input, 0U);
    EXPECT_EQ(cex->left, 3U);
    EXPECT_EQ(cex->right, 5U);
}

TEST(AssertEquivalent, RegisterMismatch) {
    EXPECT_EQ(code_of([] { assert_equivalent(synth(1, 4), synth(1, 5)); }), ErrorCode::WidthMismatch);
    EXPECT_EQ(code_of([] { assert_equivalent(synth(1, 4), synth(1, 4, Variant::controlled)); }),
              ErrorCode::WidthMismatch);
}

TEST(AssertEquivalent, DifferentAncillaCountsCompareOnData) {
    EXPECT_FALSE(assert_equivalent(synth(7, 6, Variant::unoptimized), synth(7, 6, Variant::optimized)).has_value());
}

TEST(Simulator, AdjointUndoesForwardRun) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (Variant v : {Variant::unoptimized, Variant::optimized, Variant::controlled}) {
            const Circuit c = synth(0xA7 & oracle::mask(n), n, v);
            const Program fwd(c);
            const Program back(adjoint(c));
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
                for (bool g : {false, true}) {
                    if (g && !c.has_control()) {
                        continue;
                    }
                    const BasisState s{b, 0, g};
                    ASSERT_EQ(back.run(fwd.run(s)), s);
                }
            }
        }
    }
}

TEST(Simulator, AgreesWithNaiveMachineOnRandomCircuits) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = 3 + rng() % 4;
        std::vector<Gate> gates;
        for (int k = 0; k < 25; ++k) {
            const QubitRef a = QubitRef::data(rng() % n);
            QubitRef b = QubitRef::data(rng() % n);
            QubitRef t = QubitRef::data(rng() % n);
            if (b == a) {
                b = QubitRef::data((a.index + 1) % n);
            }
            while (t == a || t == b) {
                t = QubitRef::data((t.index + 1) % n);
            }
            switch (rng() % 4) {
            case 0: gates.push_back(Gate::x(a)); break;
            case 1: gates.push_back(Gate::cx_classical(rng() & 1U, a)); break;
            case 2: gates.push_back(Gate::cnot(a, b)); break;
            default: gates.push_back(Gate::toffoli(a, b, t)); break;
            }
        }
        const Circuit c(n, 0, false, gates);
        const Program p(c);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            oracle::NaiveMachine m;
            m.load_data(b, n);
            for (const Gate& g : gates) {
                m.apply(g);
            }
            ASSERT_EQ(p.run({b, 0, false}).data, m.read_data(n));
        }
    }
}
