// SPDX-License-Identifier: Apache-2.0

#include "qadd/passes.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qadd {
namespace {

    using Sweep = bool (*)(std::vector<Gate>&);

    // One left-to-right sweep; returns true if anything was removed.
    bool cancel_sweep(std::vector<Gate>& gates) {
        std::vector<Gate> out;
        out.reserve(gates.size());
        bool changed = false;
        for (Gate& g : gates) {
            const Gate inv = inverse_of(g);
            bool cancelled = false;
            for (auto j = out.size(); j-- > 0;) {
                if (out[j] == inv) {
                    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
                    cancelled = true;
                    break;
                }
                if (!out[j].disjoint_from(g)) {
                    break;
                }
            }
            if (cancelled) {
                changed = true;
            } else {
                out.push_back(std::move(g));
            }
        }
        gates = std::move(out);
        return changed;
    }

    bool is_x_like(const Gate& g) { return g.kind() == GateKind::X || g.kind() == GateKind::CXClassical; }

    // X as a slot with bit 1
    bool slot_bit(const Gate& g) { return g.kind() == GateKind::X || g.classical_bit(); }

    bool merge_sweep(std::vector<Gate>& gates) {
        std::vector<Gate> out;
        out.reserve(gates.size());
        bool changed = false;
        for (Gate& g : gates) {
            bool merged = false;
            if (is_x_like(g)) {
                const QubitRef q = g.target();
                for (auto j = out.size(); j-- > 0;) {
                    if (!out[j].touches(q)) {
                        continue;
                    }
                    const bool one_is_slot =
                        g.kind() == GateKind::CXClassical || out[j].kind() == GateKind::CXClassical;
                    if (is_x_like(out[j]) && one_is_slot) {
                        out[j] = Gate::cx_classical(slot_bit(out[j]) != slot_bit(g), q);
                        merged = true;
                    }
                    break;
                }
            }
            if (merged) {
                changed = true;
            } else {
                out.push_back(std::move(g));
            }
        }
        gates = std::move(out);
        return changed;
    }

    std::pair<Circuit, PassReport> to_fixpoint(const Circuit& c, std::string_view name, Sweep sweep) {
        require_valid(c);
        std::vector<Gate> gates(c.gates().begin(), c.gates().end());
        PassReport report{std::string(name), gates.size(), 0, 0};
        do {
            ++report.iterations_to_fixpoint;
        } while (sweep(gates));
        report.gates_after = gates.size();
        return {c.with_gates(std::move(gates)), report};
    }

    const std::map<std::string, std::function<std::pair<Circuit, PassReport>(const Circuit&)>, std::less<>>&
    registry() {
        static const std::map<std::string, std::function<std::pair<Circuit, PassReport>(const Circuit&)>,
                              std::less<>>
            passes{
                {std::string(kCancelInverses), cancel_adjacent_inverses},
                {std::string(kMergeClassicalX), merge_classical_x},
            };
        return passes;
    }

} // namespace

std::pair<Circuit, PassReport> cancel_adjacent_inverses(const Circuit& c) {
    return to_fixpoint(c, kCancelInverses, cancel_sweep);
}

std::pair<Circuit, PassReport> merge_classical_x(const Circuit& c) {
    return to_fixpoint(c, kMergeClassicalX, merge_sweep);
}

std::vector<std::string> pass_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) {
        names.push_back(name);
    }
    return names;
}

std::pair<Circuit, std::vector<PassReport>> run_pipeline(const Circuit& c, const std::vector<std::string>& passes) {
    const auto& reg = registry();
    for (const auto& name : passes) {
        if (reg.find(name) == reg.end()) {
            throw Error(ErrorCode::UnknownPass, "no pass named '" + name + "'");
        }
    }
    require_valid(c);

    Circuit current = c;
    std::vector<PassReport> reports;
    if (passes.empty()) {
        return {current, reports};
    }
    const std::size_t max_rounds = std::max<std::size_t>(1, c.size());
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const std::vector<Gate> before(current.gates().begin(), current.gates().end());
        for (const auto& name : passes) {
            auto [next, report] = reg.find(name)->second(current);
            current = std::move(next);
            reports.push_back(std::move(report));
        }
        if (std::equal(before.begin(), before.end(), current.gates().begin(), current.gates().end())) {
            break;
        }
    }
    return {current, reports};
}

} // namespace qadd
