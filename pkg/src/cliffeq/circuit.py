"""Circuit data model and the ``.cqc`` text format.

A circuit is a flat, ordered gate list over ``n`` qubits.  List order is
application order, so the circuit's unitary is ``g_m @ ... @ g_1``.  Every
gate kind outside ``{H, S, CNOT}`` is lowered at construction time, so a
:class:`Circuit` only ever holds the three elementary Clifford gates.

Gates are stored column-wise in three numpy arrays (op code, first qubit,
second qubit) so that multi-million gate circuits stay compact and can be
handed to the compiled tableau kernel without conversion.

``.cqc`` grammar::

    # comment (anywhere, also trailing)
    qubits <N>
    <NAME> <q>
    <NAME> <q1> <q2>

with ``NAME`` in ``H S SDG X Y Z CNOT CZ SWAP`` and 0-based indices.  For
``CNOT`` the first index is the control.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

# Op codes shared with the tableau kernel.
OP_H = 0
OP_S = 1
OP_CNOT = 2

ELEMENTARY = ("H", "S", "CNOT")
ARITY = {
    "H": 1,
    "S": 1,
    "SDG": 1,
    "X": 1,
    "Y": 1,
    "Z": 1,
    "CNOT": 2,
    "CZ": 2,
    "SWAP": 2,
}


class CircuitError(ValueError):
    """Invalid gate or circuit."""


class ParseError(CircuitError):
    """Malformed ``.cqc`` input; carries the offending 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ARITY:
            raise CircuitError(f"unknown gate {self.kind!r}")
        if len(self.qubits) != ARITY[self.kind]:
            raise CircuitError(
                f"{self.kind} takes {ARITY[self.kind]} qubit(s), got {len(self.qubits)}"
            )
        if any(q < 0 for q in self.qubits):
            raise CircuitError(f"negative qubit index in {self.kind} {self.qubits}")
        if len(self.qubits) == 2 and self.qubits[0] == self.qubits[1]:
            raise CircuitError(f"{self.kind} needs two distinct qubits, got {self.qubits}")

    def __str__(self):
        return " ".join([self.kind, *map(str, self.qubits)])


def H(q: int) -> Gate:
    return Gate("H", (q,))


def S(q: int) -> Gate:
    return Gate("S", (q,))


def CNOT(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def lower(gate: Gate) -> list[Gate]:
    """Rewrite ``gate`` as H/S/CNOT, equal to the original up to global phase."""
    k, q = gate.kind, gate.qubits
    if k in ELEMENTARY:
        return [gate]
    if k == "SDG":
        return [S(q[0])] * 3
    if k == "Z":
        return [S(q[0])] * 2
    if k == "X":
        return [H(q[0]), S(q[0]), S(q[0]), H(q[0])]
    if k == "Y":
        # Z then X; X.Z = -iY, the phase is dropped.
        return lower(Gate("Z", q)) + lower(Gate("X", q))
    if k == "CZ":
        a, b = q
        return [H(b), CNOT(a, b), H(b)]
    if k == "SWAP":
        a, b = q
        return [CNOT(a, b), CNOT(b, a), CNOT(a, b)]
    raise AssertionError(k)


_KIND_OF_OP = ("H", "S", "CNOT")
_OP_OF_KIND = {"H": OP_H, "S": OP_S, "CNOT": OP_CNOT}


class Circuit:
    """Immutable lowered circuit.

    ``ops``, ``q0``, ``q1`` are read-only arrays of equal length; ``q1`` is
    ``-1`` for single-qubit gates.  Build from gates with
    :meth:`from_gates` or directly from arrays.
    """

    __slots__ = ("n", "ops", "q0", "q1")

    def __init__(self, n: int, ops=(), q0=(), q1=()):
        if n < 1:
            raise CircuitError(f"qubit count must be >= 1, got {n}")
        ops = np.array(ops, dtype=np.uint8)
        q0 = np.array(q0, dtype=np.int32)
        q1 = np.array(q1, dtype=np.int32)
        if not (len(ops) == len(q0) == len(q1)):
            raise CircuitError("ops/q0/q1 length mismatch")
        if len(ops):
            if ops.max() > OP_CNOT:
                raise CircuitError("unknown op code")
            two = ops == OP_CNOT
            if q0.min() < 0 or q0.max() >= n:
                raise CircuitError(f"qubit index out of range for n={n}")
            if two.any():
                t = q1[two]
                if t.min() < 0 or t.max() >= n:
                    raise CircuitError(f"qubit index out of range for n={n}")
                if (t == q0[two]).any():
                    raise CircuitError("CNOT with equal control and target")
            if (q1[~two] != -1).any():
                raise CircuitError("single-qubit gate with a second index")
        for a in (ops, q0, q1):
            a.flags.writeable = False
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "q0", q0)
        object.__setattr__(self, "q1", q1)

    def __setattr__(self, name, value):
        raise AttributeError("Circuit is immutable")

    @classmethod
    def from_gates(cls, n: int, gates: Iterable[Gate]) -> "Circuit":
        ops, q0, q1 = [], [], []
        for g in gates:
            if max(g.qubits) >= n:
                raise CircuitError(f"{g}: qubit index out of range for n={n}")
            for e in lower(g):
                ops.append(_OP_OF_KIND[e.kind])
                q0.append(e.qubits[0])
                q1.append(e.qubits[1] if len(e.qubits) == 2 else -1)
        return cls(n, ops, q0, q1)

    @classmethod
    def empty(cls, n: int) -> "Circuit":
        return cls(n)

    def __len__(self):
        return len(self.ops)

    def __iter__(self) -> Iterator[Gate]:
        for op, a, b in zip(self.ops.tolist(), self.q0.tolist(), self.q1.tolist()):
            yield Gate(_KIND_OF_OP[op], (a,) if b < 0 else (a, b))

    @property
    def gates(self) -> list[Gate]:
        return list(self)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.ops, other.ops)
            and np.array_equal(self.q0, other.q0)
            and np.array_equal(self.q1, other.q1)
        )

    def __hash__(self):
        return hash((self.n, self.ops.tobytes(), self.q0.tobytes(), self.q1.tobytes()))

    def __repr__(self):
        if len(self) <= 8:
            body = "; ".join(map(str, self))
        else:
            body = f"{len(self)} gates"
        return f"Circuit(n={self.n}, [{body}])"

    def __add__(self, other: "Circuit") -> "Circuit":
        return concat(self, other)


def concat(*circuits: Circuit) -> Circuit:
    n = circuits[0].n
    if any(c.n != n for c in circuits):
        raise CircuitError("cannot concatenate circuits of different widths")
    return Circuit(
        n,
        np.concatenate([c.ops for c in circuits]),
        np.concatenate([c.q0 for c in circuits]),
        np.concatenate([c.q1 for c in circuits]),
    )


def gate_count(c: Circuit) -> int:
    return len(c)


def inverse(c: Circuit) -> Circuit:
    """Reverse the gates and invert each one (S^-1 = S^3)."""
    ops = c.ops[::-1]
    q0 = c.q0[::-1]
    q1 = c.q1[::-1]
    reps = np.where(ops == OP_S, 3, 1)
    return Circuit(c.n, np.repeat(ops, reps), np.repeat(q0, reps), np.repeat(q1, reps))


def parse(text: str) -> Circuit:
    n = None
    header_line = 0
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "qubits":
                raise ParseError(lineno, f"expected header 'qubits <N>', got {line!r}")
            n = _parse_index(fields[1], lineno, "qubit count")
            if n < 1:
                raise ParseError(lineno, "qubit count must be >= 1")
            header_line = lineno
            continue
        name, args = fields[0], fields[1:]
        if name not in ARITY:
            raise ParseError(lineno, f"unknown gate {name!r}")
        if len(args) != ARITY[name]:
            raise ParseError(lineno, f"{name} takes {ARITY[name]} qubit(s), got {len(args)}")
        qubits = tuple(_parse_index(a, lineno, "qubit index") for a in args)
        for q in qubits:
            if q >= n:
                raise ParseError(lineno, f"qubit index {q} out of range for {n} qubits")
        if len(qubits) == 2 and qubits[0] == qubits[1]:
            raise ParseError(lineno, f"{name} has duplicate qubit index {qubits[0]}")
        gates.append(Gate(name, qubits))
    if n is None:
        raise ParseError(max(header_line, 1), "missing 'qubits <N>' header")
    return Circuit.from_gates(n, gates)


def _parse_index(tok: str, lineno: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, f"invalid {what} {tok!r}")
    return int(tok)


def serialize(c: Circuit) -> str:
    lines = [f"qubits {c.n}"]
    names = np.array(_KIND_OF_OP)[c.ops]
    for name, a, b in zip(names.tolist(), c.q0.tolist(), c.q1.tolist()):
        lines.append(f"{name} {a}" if b < 0 else f"{name} {a} {b}")
    return "\n".join(lines) + "\n"


def read(path) -> Circuit:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(path, c: Circuit) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(c))


def circuit_from(n: int, gates: Sequence[Gate | tuple]) -> Circuit:
    """Convenience builder accepting ``Gate`` objects or ``("H", 0)`` tuples."""
    out = []
    for g in gates:
        out.append(g if isinstance(g, Gate) else Gate(g[0], tuple(g[1:])))
    return Circuit.from_gates(n, out)
