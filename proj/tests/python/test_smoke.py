# SPDX-License-Identifier: Apache-2.0

import json
import re

import pytest

import qadd


def test_synth_and_run():
    c = qadd.synth(5, 4)
    assert c.n_data == 4
    assert c.n_ancilla == 1
    assert c.variant == qadd.Variant.optimized
    assert qadd.run(c, 10) == (15, False)


def test_controlled_run():
    c = qadd.synth(5, 4, qadd.Variant.controlled)
    assert c.has_control
    assert qadd.run(c, 7, True) == (12, True)
    assert qadd.run(c, 7, False) == (7, False)


def test_exhaustive_against_python_addition():
    for a in range(1, 64, 2):
        table = qadd.permutation_table(qadd.synth(a, 6))
        assert table == [(a + b) % 64 for b in range(64)]


def test_audit_conforms():
    report = qadd.audit(qadd.synth(9, 10))
    assert report["t_count"] == 35
    assert report["ancilla"] == 7
    assert report["conforms"] is True
    assert qadd.expected_formulas(qadd.CostFormula.proposed_controlled, 6) == (4, 51)


def test_pipeline_reaches_linear_toffoli_count():
    raw = qadd.synth(5, 5, qadd.Variant.unoptimized)
    out, reports = qadd.run_pipeline(raw, qadd.pass_names())
    assert qadd.census(raw)["toffoli"] == 12
    assert qadd.census(out)["toffoli"] == 6
    assert reports[0]["gates_before"] == len(raw)
    assert qadd.assert_equivalent(raw, out) is None


def test_counterexample():
    assert qadd.assert_equivalent(qadd.synth(3, 4), qadd.synth(5, 4)) == (0, 3, 5)


def test_errors_are_translated():
    with pytest.raises(qadd.QaddError, match="UnknownPass"):
        qadd.run_pipeline(qadd.synth(3, 4), ["fold"])
    with pytest.raises(ValueError):
        qadd.normalize_constant(3, 0)
    bad = qadd.Circuit(2, 1, False, [qadd.Gate(qadd.GateKind.And, [qadd.QubitRef.data(0), qadd.QubitRef.data(1),
                                                                  qadd.QubitRef.ancilla(0)])])
    assert qadd.validate(bad)["code"] == "DanglingAnd"


def test_comparison_table():
    table = qadd.comparison_table(5)
    rows = {r["name"]: r for r in table["rows"]}
    assert (rows["Proposed"]["ancilla_formula"], rows["Proposed"]["t_formula"]) == (2, 15)
    assert rows["Cuccaro RCA"]["t_measured"] == 56
    assert rows["Cuccaro RCA"]["t_delta"] == 7


def test_json_round_trip():
    c = qadd.synth(43, 6, qadd.Variant.controlled)
    back = qadd.circuit_from_json(qadd.to_json(c))
    assert back.gates == c.gates
    assert json.loads(qadd.to_json(c))["has_control"] is True


def test_cli_entry_point():
    code, out, err = qadd.cli(["count", "--constant", "9", "--width", "10"])
    assert code == 0, err
    assert json.loads(out)["t_count"] == 35
    code, _, err = qadd.cli(["synth", "--width", "4"])
    assert code == 2
    assert err


def _census_from_qasm(text):
    counts = {"x": 0, "cx": 0, "ccx": 0}
    for line in text.splitlines():
        m = re.match(r"^(x|cx|ccx) ", line)
        if m:
            counts[m.group(1)] += 1
    return counts


@pytest.mark.parametrize("variant", [qadd.Variant.unoptimized, qadd.Variant.optimized, qadd.Variant.controlled])
def test_qasm_reparses_with_matching_counts(variant):
    openqasm3 = pytest.importorskip("openqasm3")
    c = qadd.synth(0x35, 7, variant)
    text = qadd.to_qasm(c)
    program = openqasm3.parse(text)
    names = [s.name.name for s in program.statements if type(s).__name__ == "QuantumGate"]
    report = qadd.census(c)
    assert names.count("ccx") == 2 * report["and_pairs"] + report["toffoli"]
    assert names.count("cx") == report["cnot"]
    assert names.count("x") == report["x"] + report["cx_emitted"]
    assert _census_from_qasm(text) == {"x": names.count("x"), "cx": names.count("cx"), "ccx": names.count("ccx")}
