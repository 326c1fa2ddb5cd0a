import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cliffeq.circuit import Circuit, CircuitError, circuit_from, concat, inverse, parse
from cliffeq.equivalence import check_equivalence, check_identity
from cliffeq.oracle import apply_to_state, oracle_equivalent
from cliffeq.pauli import PauliString, conjugate_by_circuit, pauli
from cliffeq.tableau import new_basis, tableau_equal

from .conftest import circuits, random_circuit

HS3 = "qubits 1\nH 0\nS 0\nH 0\nS 0\nH 0\nS 0\n"
X_AS_HSSH = "qubits 1\nH 0\nS 0\nS 0\nH 0\n"


def test_a_vs_b(circuit_a, circuit_b):
    r = check_equivalence(circuit_a, circuit_b)
    assert r.equivalent and r.witness is None
    assert (r.n, r.m_u, r.m_v) == (2, 5, 1)


def test_empty_vs_a(circuit_a):
    r = check_equivalence(Circuit.empty(2), circuit_a)
    assert not r.equivalent
    w = r.witness
    assert (w.basis, w.generator, w.u_pauli, w.v_pauli) == ("Z", 0, pauli("+ZI"), pauli("+ZZ"))


def test_hs_cubed_is_a_phase():
    assert check_equivalence(parse(HS3), Circuit.empty(1)).equivalent


def test_x_vs_empty():
    r = check_equivalence(parse(X_AS_HSSH), Circuit.empty(1))
    assert not r.equivalent
    assert (r.witness.basis, r.witness.u_pauli, r.witness.v_pauli) == ("Z", pauli("-Z"), pauli("+Z"))


def test_identity_examples(circuit_a):
    assert check_identity(Circuit.empty(3)).equivalent
    assert check_identity(concat(circuit_a, inverse(circuit_a))).equivalent
    r = check_identity(parse("qubits 1\nS 0"))
    assert not r.equivalent
    # S fixes Z, so the mismatch shows up in the X basis: S X S^dagger = Y.
    assert (r.witness.basis, r.witness.u_pauli, r.witness.v_pauli) == ("X", pauli("+Y"), pauli("+X"))


def test_width_mismatch_is_an_error(circuit_a):
    with pytest.raises(CircuitError):
        check_equivalence(circuit_a, Circuit.empty(3))


def test_json_schema(circuit_a):
    d = json.loads(check_equivalence(Circuit.empty(2), circuit_a).to_json())
    assert set(d) == {"verdict", "witness", "n", "m_u", "m_v", "time_ms"}
    assert d["verdict"] == "NotEquivalent"
    assert d["witness"] == {"basis": "Z", "generator": 0, "u_pauli": "+ZI", "v_pauli": "+ZZ"}
    d = check_equivalence(circuit_a, circuit_a).to_dict()
    assert d["witness"] is None and d["verdict"] == "Equivalent"


@settings(max_examples=200, deadline=None)
@given(circuits(max_n=5, max_gates=25, n=None), st.data())
def test_agrees_with_oracle(u, data):
    v = data.draw(circuits(max_gates=25, n=u.n))
    assert check_equivalence(u, v).equivalent == oracle_equivalent(u, v)


@settings(max_examples=100, deadline=None)
@given(circuits(max_n=6, max_gates=30), st.data())
def test_witness_is_the_conjugated_generator(u, data):
    v = data.draw(circuits(max_gates=30, n=u.n))
    r = check_equivalence(u, v)
    if r.equivalent:
        return
    w = r.witness
    start = PauliString.single(u.n, w.generator, w.basis)
    assert w.u_pauli == conjugate_by_circuit(start, u)
    assert w.v_pauli == conjugate_by_circuit(start, v)
    assert w.u_pauli != w.v_pauli


@settings(max_examples=100, deadline=None)
@given(circuits(max_n=6, max_gates=30), st.data())
def test_global_phase_blindness(c, data):
    q = data.draw(st.integers(0, c.n - 1))
    block = data.draw(st.sampled_from(["HS3", "S4"]))
    gates = [("H", q), ("S", q)] * 3 if block == "HS3" else [("S", q)] * 4
    at = data.draw(st.integers(0, len(c)))
    g = c.gates
    padded = Circuit.from_gates(c.n, g[:at] + circuit_from(c.n, gates).gates + g[at:])
    assert check_equivalence(c, padded).equivalent


@settings(max_examples=60, deadline=None)
@given(circuits(max_n=6, max_gates=30), st.data())
def test_sign_sensitivity(c, data):
    basis = data.draw(st.sampled_from("ZX"))
    i = data.draw(st.integers(0, c.n - 1))
    a = new_basis(c.n, basis)
    a.apply_circuit(c)
    b = a.copy()
    b.signs[i >> 6] ^= np.uint64(1) << np.uint64(i & 63)
    assert tableau_equal(a, b).generator == i


@settings(max_examples=100, deadline=None)
@given(circuits(max_n=6, max_gates=30), st.data())
def test_symmetry(u, data):
    v = data.draw(circuits(max_gates=30, n=u.n))
    r1, r2 = check_equivalence(u, v), check_equivalence(v, u)
    assert r1.equivalent == r2.equivalent
    if not r1.equivalent:
        w1, w2 = r1.witness, r2.witness
        assert (w1.basis, w1.generator, w1.u_pauli, w1.v_pauli) == (w2.basis, w2.generator, w2.v_pauli, w2.u_pauli)


def test_determinism():
    rng = np.random.default_rng(11)
    for _ in range(20):
        u, v = random_circuit(rng, 5, 30), random_circuit(rng, 5, 30)
        a, b = check_equivalence(u, v), check_equivalence(u, v)
        assert (a.equivalent, a.witness) == (b.equivalent, b.witness)


def test_parallel_matches_sequential():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(1, 70))
        u, v = random_circuit(rng, n, 60), random_circuit(rng, n, 60)
        a, b = check_equivalence(u, v), check_equivalence(u, v, parallel=True)
        assert (a.equivalent, a.witness) == (b.equivalent, b.witness)
        assert check_identity(u).witness == check_identity(u, parallel=True).witness


@settings(max_examples=60, deadline=None)
@given(circuits(max_n=6, max_gates=30))
def test_identity_matches_empty_comparison(c):
    a, b = check_identity(c), check_equivalence(c, Circuit.empty(c.n))
    assert (a.equivalent, a.witness) == (b.equivalent, b.witness)


def test_strictness_counterexample(circuit_a):
    # Same output states on |00> and |++>, yet the circuits differ.
    zero = np.array([1, 0, 0, 0], dtype=complex)
    plus = np.full(4, 0.5, dtype=complex)
    for state in (zero, plus):
        np.testing.assert_allclose(apply_to_state(circuit_a, state), state, atol=1e-9)
    assert not check_equivalence(Circuit.empty(2), circuit_a).equivalent
