"""Signed Pauli strings in the symplectic (x, z) bit encoding.

Qubit ``j`` is bit ``j`` of the ``x`` and ``z`` integers:
I = (0, 0), X = (1, 0), Y = (1, 1), Z = (0, 1).  The text form puts the sign
first and qubit 0 leftmost, e.g. ``"+XZIY"``.

This module is the slow, table-driven reference that the packed tableau is
tested against; it never touches the bitwise update rules used there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, lower

_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {v: k for k, v in _LETTERS.items()}

# Phases as powers of i: 0 -> +1, 1 -> +i, 2 -> -1, 3 -> -i.
_PHASE_TEXT = {0: "+", 1: "+i", 2: "-", 3: "-i"}


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int
    z: int
    negative: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.n}")
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full or self.x < 0 or self.z < 0:
            raise ValueError("x/z bits beyond the qubit count")

    @property
    def sign(self) -> int:
        return -1 if self.negative else 1

    def letter(self, j: int) -> str:
        return _LETTERS[(self.x >> j) & 1, (self.z >> j) & 1]

    def __str__(self):
        return ("-" if self.negative else "+") + "".join(self.letter(j) for j in range(self.n))

    def __repr__(self):
        return f"PauliString({str(self)!r})"

    def __neg__(self):
        return PauliString(self.n, self.x, self.z, not self.negative)

    @classmethod
    def parse(cls, text: str) -> "PauliString":
        negative = False
        if text[:1] in "+-":
            negative = text[0] == "-"
            text = text[1:]
        if not text:
            raise ValueError("empty Pauli string")
        x = z = 0
        for j, ch in enumerate(text):
            try:
                bx, bz = _BITS[ch]
            except KeyError:
                raise ValueError(f"bad Pauli letter {ch!r}") from None
            x |= bx << j
            z |= bz << j
        return cls(len(text), x, z, negative)

    @classmethod
    def single(cls, n: int, j: int, letter: str) -> "PauliString":
        bx, bz = _BITS[letter]
        return cls(n, bx << j, bz << j)


def pauli(text: str) -> PauliString:
    return PauliString.parse(text)


@dataclass(frozen=True)
class PhasedPauli:
    """Pauli string times a phase ``i**power``.

    The string's own sign is folded into ``power`` on construction, so
    ``pauli`` always has ``negative=False``.
    """

    pauli: PauliString
    power: int = 0

    def __post_init__(self):
        p = self.pauli
        power = (self.power + (2 if p.negative else 0)) % 4
        object.__setattr__(self, "pauli", PauliString(p.n, p.x, p.z))
        object.__setattr__(self, "power", power)

    @property
    def phase(self) -> complex:
        return (1, 1j, -1, -1j)[self.power]

    @property
    def is_hermitian(self) -> bool:
        return self.power in (0, 2)

    def to_signed(self) -> PauliString:
        if not self.is_hermitian:
            raise ValueError(f"phase {self.phase} is not +-1")
        p = self.pauli
        return PauliString(p.n, p.x, p.z, self.power == 2)

    def __str__(self):
        return _PHASE_TEXT[self.power] + str(self.pauli)[1:]


def identity(n: int) -> PauliString:
    return PauliString(n, 0, 0)


def _as_phased(p) -> PhasedPauli:
    return p if isinstance(p, PhasedPauli) else PhasedPauli(p)


def pauli_mul(a: PauliString | PhasedPauli, b: PauliString | PhasedPauli) -> PhasedPauli:
    """Exact matrix product ``a @ b`` including the phase."""
    a, b = _as_phased(a), _as_phased(b)
    pa, pb = a.pauli, b.pauli
    if pa.n != pb.n:
        raise ValueError(f"dimension mismatch: {pa.n} vs {pb.n}")
    power = a.power + b.power
    # Per-qubit phase from the single-qubit product table
    # (XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i).
    for j in range(pa.n):
        power += _SINGLE_PHASE[pa.letter(j), pb.letter(j)]
    return PhasedPauli(PauliString(pa.n, pa.x ^ pb.x, pa.z ^ pb.z), power)


_SINGLE_PHASE = {(p, q): 0 for p in "IXYZ" for q in "IXYZ"}
for _p, _q in (("X", "Y"), ("Y", "Z"), ("Z", "X")):
    _SINGLE_PHASE[_p, _q] = 1
    _SINGLE_PHASE[_q, _p] = 3


def commutes(a: PauliString, b: PauliString) -> bool:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    return bin((a.x & b.z) ^ (a.z & b.x)).count("1") % 2 == 0


# Conjugation images g P g^dagger of single-qubit Paulis, as (letter, negative).
_H_TABLE = {"I": ("I", False), "X": ("Z", False), "Y": ("Y", True), "Z": ("X", False)}
_S_TABLE = {"I": ("I", False), "X": ("Y", False), "Y": ("X", True), "Z": ("Z", False)}

# CNOT images of the four two-qubit generators, as (control, target) letters.
_CNOT_GENERATORS = {
    ("X", "I"): ("X", "X"),
    ("Z", "I"): ("Z", "I"),
    ("I", "X"): ("I", "X"),
    ("I", "Z"): ("Z", "Z"),
}


def _local(n: int, c: int, t: int, lc: str, lt: str) -> PauliString:
    bc, bt = _BITS[lc], _BITS[lt]
    return PauliString(n, (bc[0] << c) | (bt[0] << t), (bc[1] << c) | (bt[1] << t))


def conjugate_by_gate(p: PauliString, g: Gate) -> PauliString:
    """Return ``g p g^dagger``.  Non-elementary gates are lowered first."""
    if any(q >= p.n for q in g.qubits):
        raise IndexError(f"{g} out of range for {p.n} qubits")
    if g.kind not in ("H", "S", "CNOT"):
        for e in lower(g):
            p = conjugate_by_gate(p, e)
        return p
    if g.kind in ("H", "S"):
        (j,) = g.qubits
        table = _H_TABLE if g.kind == "H" else _S_TABLE
        letter, flip = table[p.letter(j)]
        bx, bz = _BITS[letter]
        mask = ~(1 << j)
        return PauliString(
            p.n,
            (p.x & mask) | (bx << j),
            (p.z & mask) | (bz << j),
            p.negative ^ flip,
        )

    c, t = g.qubits
    n = p.n
    # Decompose the (c, t) part as i^{#Y} X_c^a Z_c^b X_t^d Z_t^e, map each
    # factor through the generator images and multiply back together.
    keep = ~((1 << c) | (1 << t))
    rest = PauliString(n, p.x & keep, p.z & keep, p.negative)
    xc, zc = (p.x >> c) & 1, (p.z >> c) & 1
    xt, zt = (p.x >> t) & 1, (p.z >> t) & 1
    acc = PhasedPauli(rest, (xc & zc) + (xt & zt))
    for present, key in ((xc, ("X", "I")), (zc, ("Z", "I")), (xt, ("I", "X")), (zt, ("I", "Z"))):
        if present:
            acc = pauli_mul(acc, _local(n, c, t, *_CNOT_GENERATORS[key]))
    return acc.to_signed()


def conjugate_by_circuit(p: PauliString, c: Circuit) -> PauliString:
    """Gate-by-gate conjugation ``U p U^dagger`` for the circuit unitary ``U``."""
    for g in c:
        p = conjugate_by_gate(p, g)
    return p
