"""Brute-force ground truth from dense ``2^n x 2^n`` unitaries.

Qubit 0 is the most significant bit of the basis-state index, so a Pauli
string's leftmost letter is the leftmost Kronecker factor.
"""

from __future__ import annotations

import numpy as np

from .circuit import Circuit, OP_CNOT, OP_H, OP_S
from .pauli import PauliString, PhasedPauli

MAX_ORACLE_QUBITS = 8
TOL = 1e-9
PIVOT_MIN = 1e-6

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
PAULI_MATRICES = {"I": I2, "X": X, "Y": Y, "Z": Z}


class OracleError(ValueError):
    pass


def _check_width(n: int) -> None:
    if n > MAX_ORACLE_QUBITS:
        raise OracleError(f"{n} qubits exceeds the oracle cap of {MAX_ORACLE_QUBITS}")


def apply_circuit(c: Circuit, columns: np.ndarray) -> np.ndarray:
    """Apply the circuit to each column of ``columns`` (shape ``(2^n, k)``)."""
    n = c.n
    t = np.array(columns, dtype=complex).reshape((2,) * n + (-1,))
    for op, a, b in zip(c.ops.tolist(), c.q0.tolist(), c.q1.tolist()):
        if op == OP_H:
            t = np.moveaxis(np.tensordot(H, t, axes=([1], [a])), 0, a)
        elif op == OP_S:
            idx = [slice(None)] * t.ndim
            idx[a] = 1
            t[tuple(idx)] *= 1j
        elif op == OP_CNOT:
            idx = [slice(None)] * t.ndim
            idx[a] = 1
            sub = t[tuple(idx)]
            # axis b shifts down by one if it came after the removed axis a
            tb = b - 1 if b > a else b
            t[tuple(idx)] = np.flip(sub, axis=tb).copy()
        else:
            raise AssertionError(op)
    return t.reshape(2**n, -1)


def dense_unitary(c: Circuit) -> np.ndarray:
    _check_width(c.n)
    return apply_circuit(c, np.eye(2**c.n, dtype=complex))


def apply_to_state(c: Circuit, state: np.ndarray) -> np.ndarray:
    _check_width(c.n)
    return apply_circuit(c, np.asarray(state).reshape(-1, 1))[:, 0]


def embed(gate: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Full ``2^n`` matrix of a 1- or 2-qubit gate via explicit Kronecker products.

    Independent of :func:`apply_circuit`; used to cross-check it.
    """
    if len(qubits) == 1:
        (q,) = qubits
        return np.kron(np.kron(np.eye(2**q), gate), np.eye(2 ** (n - q - 1)))
    full = np.zeros((2**n, 2**n), dtype=complex)
    for col in range(2**n):
        bits = [(col >> (n - 1 - k)) & 1 for k in range(n)]
        local = 2 * bits[qubits[0]] + bits[qubits[1]]
        for out in range(4):
            amp = gate[out, local]
            if amp == 0:
                continue
            nb = list(bits)
            nb[qubits[0]], nb[qubits[1]] = out >> 1, out & 1
            full[int("".join(map(str, nb)), 2), col] += amp
    return full


def pauli_matrix(p: PauliString | PhasedPauli) -> np.ndarray:
    phase = 1.0
    if isinstance(p, PhasedPauli):
        phase, p = p.phase, p.pauli
    m = np.ones((1, 1), dtype=complex)
    for j in range(p.n):
        m = np.kron(m, PAULI_MATRICES[p.letter(j)])
    return phase * p.sign * m


def global_phase(u: np.ndarray, v: np.ndarray) -> complex | None:
    """``c`` with ``u == c v`` to within ``TOL``, else ``None``."""
    flat = np.abs(v).ravel()
    pivots = np.flatnonzero(flat > PIVOT_MIN)
    assert len(pivots), "unitary with no admissible pivot entry"
    r, s = divmod(int(pivots[0]), v.shape[1])
    c = u[r, s] / v[r, s]
    if np.max(np.abs(u - c * v)) > TOL:
        return None
    assert abs(abs(c) - 1) <= TOL, f"|c| = {abs(c)} for unitaries"
    return complex(c)


def oracle_equivalent(u: Circuit, v: Circuit) -> bool:
    if u.n != v.n:
        raise OracleError(f"width mismatch: {u.n} vs {v.n}")
    return global_phase(dense_unitary(u), dense_unitary(v)) is not None


def decode_pauli(m: np.ndarray, n: int) -> PhasedPauli:
    """Recover ``alpha * P`` from its dense matrix; raise if it is not one."""
    dim = 2**n
    xmask = int(np.argmax(np.abs(m[0])))
    cols = np.arange(dim)
    diag = m[cols ^ xmask, cols]  # alpha * (-1)^{z . c}
    alpha = diag[0]
    x = z = 0
    for j in range(n):
        bit = 1 << (n - 1 - j)
        if xmask & bit:
            x |= 1 << j
        if diag[bit].real * alpha.real + diag[bit].imag * alpha.imag < 0:
            z |= 1 << j
    # X^x Z^z = (-i)^{#Y} P, with P in the Y=(1,1) encoding
    ny = bin(x & z).count("1")
    phase = alpha * (-1j) ** ny
    power = int(np.rint(np.angle(phase) / (np.pi / 2))) % 4
    if abs(phase - 1j**power) > TOL:
        raise OracleError(f"phase {phase} is not a power of i")
    pp = PhasedPauli(PauliString(n, x, z), power)
    if np.max(np.abs(pauli_matrix(pp) - m)) > TOL:
        raise OracleError("matrix is not a scaled Pauli string")
    return pp


def oracle_conjugate(c: Circuit, p: PauliString) -> PhasedPauli:
    u = dense_unitary(c)
    return decode_pauli(u @ pauli_matrix(p) @ u.conj().T, c.n)
