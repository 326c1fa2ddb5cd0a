import numpy as np
import pytest
from hypothesis import strategies as st

from cliffeq.circuit import Circuit, Gate, parse

CIRCUIT_A_TEXT = "qubits 2\nH 0\nH 1\nCNOT 0 1\nH 0\nH 1\n"
CIRCUIT_B_TEXT = "qubits 2\nCNOT 1 0\n"


@pytest.fixture
def circuit_a():
    return parse(CIRCUIT_A_TEXT)


@pytest.fixture
def circuit_b():
    return parse(CIRCUIT_B_TEXT)


def random_circuit(rng: np.random.Generator, n: int, m: int) -> Circuit:
    gates = []
    for _ in range(m):
        k = rng.integers(3 if n > 1 else 2)
        if k == 2:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(Gate("CNOT", (int(a), int(b))))
        else:
            gates.append(Gate("HS"[k], (int(rng.integers(n)),)))
    return Circuit.from_gates(n, gates)


@st.composite
def gates(draw, n, kinds=("H", "S", "CNOT")):
    kinds = [k for k in kinds if n > 1 or k not in ("CNOT", "CZ", "SWAP")]
    kind = draw(st.sampled_from(kinds))
    if kind in ("CNOT", "CZ", "SWAP"):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 2))
        return Gate(kind, (a, b if b < a else b + 1))
    return Gate(kind, (draw(st.integers(0, n - 1)),))


@st.composite
def circuits(draw, max_n=4, max_gates=30, kinds=("H", "S", "CNOT"), n=None):
    if n is None:
        n = draw(st.integers(1, max_n))
    gs = draw(st.lists(gates(n, kinds), max_size=max_gates))
    return Circuit.from_gates(n, gs)


@st.composite
def pauli_strings(draw, n):
    from cliffeq.pauli import PauliString

    full = (1 << n) - 1
    return PauliString(
        n,
        draw(st.integers(0, full)),
        draw(st.integers(0, full)),
        draw(st.booleans()),
    )
