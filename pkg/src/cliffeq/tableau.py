"""Bit-packed stabilizer tableau (stabilizer rows only, no destabilizers).

Columns are stored qubit-major: each qubit owns one x-bitvector and one
z-bitvector over the ``n`` generators, packed into 64-bit words, plus a
shared sign bitvector.  A gate rewrites only the columns it acts on, so each
gate costs ``O(n / 64)`` word operations.

Columns start unwritten.  An unwritten column reads as its basis default and
is filled in the first time a gate touches it, so creating a tableau costs
``O(n)`` rather than ``O(n^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .circuit import Circuit, OP_CNOT, OP_H, OP_S
from .pauli import PauliString

_BASES = {"Z": K.BASIS_Z, "X": K.BASIS_X}


@dataclass(frozen=True)
class Mismatch:
    generator: int
    a: PauliString
    b: PauliString


class StabilizerTableau:
    def __init__(self, n: int, basis: str = "Z", *, lazy: bool = True):
        if n < 1:
            raise ValueError(f"qubit count must be >= 1, got {n}")
        if basis not in _BASES:
            raise ValueError(f"basis must be 'Z' or 'X', got {basis!r}")
        self.n = n
        self.basis = basis
        self._basis = _BASES[basis]
        words = (n + 63) // 64
        # np.empty: columns are only read after being materialized.
        self.x = np.empty((n, words), dtype=np.uint64)
        self.z = np.empty((n, words), dtype=np.uint64)
        self.signs = np.zeros(words, dtype=np.uint64)
        self.col_init = np.zeros(n, dtype=np.uint8)
        self.column_writes = np.zeros(n, dtype=np.int64)
        if not lazy:
            for j in range(n):
                K.materialize(self.x, self.z, self.col_init, self._basis, j)

    @classmethod
    def from_rows(cls, rows: list[PauliString | str], basis: str = "Z") -> "StabilizerTableau":
        """Eager tableau with the given generator rows (for tests and fixtures)."""
        rows = [r if isinstance(r, PauliString) else PauliString.parse(r) for r in rows]
        n = len(rows)
        if any(r.n != n for r in rows):
            raise ValueError("need n rows of length n")
        t = cls(n, basis, lazy=False)
        t.x[:] = 0
        t.z[:] = 0
        one = np.uint64(1)
        for i, r in enumerate(rows):
            w, b = i >> 6, np.uint64(i & 63)
            for j in range(n):
                if (r.x >> j) & 1:
                    t.x[j, w] |= one << b
                if (r.z >> j) & 1:
                    t.z[j, w] |= one << b
            if r.negative:
                t.signs[w] |= one << b
        return t

    def copy(self) -> "StabilizerTableau":
        t = StabilizerTableau.__new__(StabilizerTableau)
        t.n, t.basis, t._basis = self.n, self.basis, self._basis
        for name in ("x", "z", "signs", "col_init", "column_writes"):
            setattr(t, name, getattr(self, name).copy())
        return t

    def _check(self, *qubits):
        for q in qubits:
            if not 0 <= q < self.n:
                raise IndexError(f"qubit {q} out of range for {self.n} qubits")

    def _run(self, ops, q0, q1):
        K.run(
            self.x, self.z, self.signs, self.col_init, self._basis,
            np.asarray(ops, dtype=np.uint8),
            np.asarray(q0, dtype=np.int32),
            np.asarray(q1, dtype=np.int32),
            self.column_writes,
        )

    def apply_h(self, j: int) -> None:
        self._check(j)
        self._run([OP_H], [j], [-1])

    def apply_s(self, j: int) -> None:
        self._check(j)
        self._run([OP_S], [j], [-1])

    def apply_cnot(self, control: int, target: int) -> None:
        self._check(control, target)
        if control == target:
            raise ValueError(f"CNOT control equals target ({control})")
        self._run([OP_CNOT], [control], [target])

    def apply_circuit(self, c: Circuit) -> None:
        if c.n != self.n:
            raise ValueError(f"circuit has {c.n} qubits, tableau has {self.n}")
        self._run(c.ops, c.q0, c.q1)

    def row(self, i: int) -> PauliString:
        if not 0 <= i < self.n:
            raise IndexError(f"generator {i} out of range for {self.n}")
        xb = np.zeros(self.n, dtype=np.uint8)
        zb = np.zeros(self.n, dtype=np.uint8)
        neg = K.read_row(self.x, self.z, self.signs, self.col_init, self._basis, i, xb, zb)
        return PauliString(self.n, _to_int(xb), _to_int(zb), bool(neg))

    def rows(self) -> list[PauliString]:
        return [self.row(i) for i in range(self.n)]

    def __str__(self):
        return "\n".join(str(r) for r in self.rows())

    def __eq__(self, other):
        if not isinstance(other, StabilizerTableau):
            return NotImplemented
        return self.basis == other.basis and tableau_equal(self, other) is None


def _to_int(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def new_basis(n: int, kind: str = "Z", *, lazy: bool = True) -> StabilizerTableau:
    return StabilizerTableau(n, kind, lazy=lazy)


def tableau_equal(a: StabilizerTableau, b: StabilizerTableau) -> Mismatch | None:
    """First differing generator row (signs included), or ``None``."""
    if a.n != b.n:
        raise ValueError(f"shape mismatch: {a.n} vs {b.n} qubits")
    if a.basis != b.basis:
        raise ValueError("cannot compare tableaux with different default bases")
    i = K.first_mismatch(
        a.x, a.z, a.signs, a.col_init, b.x, b.z, b.signs, b.col_init, a._basis
    )
    if i < 0:
        return None
    return Mismatch(int(i), a.row(i), b.row(i))
