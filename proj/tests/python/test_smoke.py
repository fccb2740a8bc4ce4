"""Smoke tests for the python module: each core operation once, end to end."""

import math

import pytest

import stabforge as sf


def test_pauli_algebra():
    a = sf.parse_pauli("XZZXI")
    assert a.letters() == "XZZXI"
    assert a.n == 5
    assert [a.x(j) for j in range(5)] == [True, False, False, True, False]

    assert sf.symplectic_product(sf.parse_pauli("X"), sf.parse_pauli("Z")) == 1
    prod = sf.multiply(sf.parse_pauli("X"), sf.parse_pauli("Z"))
    assert prod.letters() == "Y"
    assert prod.phase_exponent() == 3

    with pytest.raises(ValueError):
        sf.parse_pauli("XQ")


def test_standard_form_and_logicals():
    code = sf.builtin("five_qubit")
    form = sf.to_standard_form(code.check_matrix())
    assert form.r == 4
    assert form.perm == [0, 1, 2, 3, 4]
    assert form.row_bits()[0] == "10001|11011"
    assert form.logical_x() == ["ZIIZX"]
    assert form.logical_z() == ["ZZZZZ"]

    steane = sf.to_standard_form(sf.builtin("steane").check_matrix())
    assert steane.r == 3
    assert steane.perm == [4, 5, 6, 0, 1, 3, 2]


def test_encoder_synthesis_and_simulation():
    form = sf.to_standard_form(sf.builtin("five_qubit").check_matrix())
    encoder = sf.synth_encoder(form)
    optimized = sf.optimize_trivial_z(encoder, {0, 1, 2, 3})
    counts = sf.gate_counts(optimized)
    assert (counts["H"], counts["S"], counts["CX"], counts["CY"], counts["CZ"]) == (4, 2, 2, 2, 4)

    result = sf.run(optimized, sf.init_basis(5, "00000"))
    amps = result["state"].amplitudes()
    nonzero = [x for x in amps if abs(x) > 1e-12]
    assert len(nonzero) == 16
    assert all(abs(abs(x.real) - 0.25) < 1e-9 and abs(x.imag) < 1e-9 for x in nonzero)
    assert sf.eigencheck(result["state"], sf.parse_pauli("XZZXI")) == 1


def test_circuit_round_trip():
    text = "qubits 2\ncbits 0\nH 0\nCX 0 1\n"
    circuit = sf.parse_circuit(text)
    assert sf.serialize(circuit) == text
    assert len(circuit) == 2


def test_syndrome_table_and_lookup():
    code = sf.builtin("five_qubit")
    table = sf.syndrome_table(code.generators(), code.n)
    rows = table.rows()
    assert rows[0] == ("XIIII", "0001", 1)
    assert table.lookup("0111") == "IIIIY"
    assert table.lookup("0000") == "IIIII"


def test_roundtrip_verification():
    report = sf.verify_roundtrip(sf.builtin("five_qubit"), "0", "XIIII", seed=1)
    assert report["pass"]
    assert report["decimal"] == 1
    assert report["fidelity"] >= 1 - 1e-9

    steane = sf.verify_roundtrip(sf.builtin("steane"), "0", "IIIZIII", seed=1)
    assert steane["decimal"] == 48
    assert steane["pass"]


def test_shor_figures():
    inv = 1 / math.sqrt(2)
    report = sf.shor_figure_roundtrip("IIIYIIIII", inv, inv * 1j)
    assert report["pass"]


def test_routing():
    circuit = sf.parse_circuit("qubits 3\ncbits 0\nCX 0 2\n")
    graph = sf.grid_graph(1, 3)
    layout = sf.Layout([0, 1, 2])
    routed = sf.route(circuit, graph, layout)
    assert routed.swap_count == 1
    assert sf.is_compliant(routed.circuit, graph, layout)
    physical = sf.to_physical(routed.circuit, layout)
    expanded = sf.decompose_swaps(physical)
    assert sf.gate_counts(expanded)["SWAP"] == 0


def test_codeword_amplitudes():
    assert sf.verify_codeword_amplitudes(sf.builtin("five_qubit"), "0")["pass"]
    assert sf.verify_codeword_amplitudes(sf.builtin("steane"), "1")["pass"]
