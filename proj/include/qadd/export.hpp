// SPDX-License-Identifier: Apache-2.0

/// \file export.hpp
/// Serialization: OpenQASM 3.0 lowering, the JSON gate list, and JSON forms
/// of resource reports and comparison tables.
#pragma once

#include "qadd/baseline.hpp"
#include "qadd/circuit.hpp"
#include "qadd/resources.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qadd {

using ordered_json = nlohmann::ordered_json;

/// Report object with fields in declaration order.
ordered_json to_json(const ResourceReport& r);

/// {"n_data", "n_ancilla", "has_control", "gates": [{"kind", ["bit",] "operands"}]}
ordered_json to_json(const Circuit& c);

/// Inverse of to_json(const Circuit&). Throws Error(ParseError) on malformed
/// input; the result is not validated.
Circuit circuit_from_json(const nlohmann::json& j);

/// OpenQASM 3.0 using only x, cx and ccx. Registers flatten to b (data), anc
/// (ancilla) and ctl (control). And/AndDagger lower to ccx preceded by a
/// `// and` or `// and_dagger` line; zero-bit classical slots are dropped.
/// The header comments carry the audit() report as one-line JSON.
std::string to_qasm(const Circuit& c);

/// One gate per line, e.g. `toffoli(b[1], anc[0] -> b[4])`.
std::string to_text(const Circuit& c);

ordered_json to_json(const std::vector<ComparisonRow>& rows, std::uint32_t n);

/// Aligned plain-text table with explicit measured-minus-formula deltas.
std::string to_text(const std::vector<ComparisonRow>& rows, std::uint32_t n);

} // namespace qadd
