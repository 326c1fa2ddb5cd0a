"""Exact equivalence (up to global phase) of Clifford circuits.

Two unitaries agree up to a phase exactly when they conjugate every single
qubit ``Z_j`` and ``X_j`` to the same signed Pauli string.  For Clifford
circuits those images are the rows of the tableaux obtained by simulating
each circuit from the ``{Z_j}`` and ``{X_j}`` generator sets, so the check is
four tableau simulations and a row-by-row comparison.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .circuit import Circuit, CircuitError
from .pauli import PauliString
from .tableau import StabilizerTableau, new_basis, tableau_equal


@dataclass(frozen=True)
class Witness:
    basis: str
    generator: int
    u_pauli: PauliString
    v_pauli: PauliString


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: Witness | None
    n: int
    m_u: int
    m_v: int
    time_ms: float

    @property
    def verdict(self) -> str:
        return "Equivalent" if self.equivalent else "NotEquivalent"

    def __bool__(self):
        return self.equivalent

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "verdict": self.verdict,
            "witness": None
            if w is None
            else {
                "basis": w.basis,
                "generator": w.generator,
                "u_pauli": str(w.u_pauli),
                "v_pauli": str(w.v_pauli),
            },
            "n": self.n,
            "m_u": self.m_u,
            "m_v": self.m_v,
            "time_ms": self.time_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def describe(self) -> str:
        if self.witness is None:
            return self.verdict
        w = self.witness
        return (
            f"{self.verdict}\n"
            f"witness: basis {w.basis}, generator {w.generator}: "
            f"U gives {w.u_pauli}, V gives {w.v_pauli}"
        )


def _simulate(c: Circuit | None, n: int, basis: str) -> StabilizerTableau:
    t = new_basis(n, basis)
    if c is not None:
        t.apply_circuit(c)
    return t


def _decide(u: Circuit, v: Circuit | None, parallel: bool) -> Witness | None:
    # Both bases are always simulated, so runtime does not depend on the verdict.
    n = u.n
    if parallel:
        jobs = [(c, b) for b in "ZX" for c in (u, v)]
        # Kernels release the GIL, so threads give real concurrency.
        with ThreadPoolExecutor(max_workers=4) as pool:
            tabs = list(pool.map(lambda job: _simulate(job[0], n, job[1]), jobs))
        found = [tableau_equal(tabs[0], tabs[1]), tableau_equal(tabs[2], tabs[3])]
    else:
        # One basis at a time keeps only two tableaux alive.
        found = []
        for basis in "ZX":
            ta, tb = _simulate(u, n, basis), _simulate(v, n, basis)
            found.append(tableau_equal(ta, tb))
            del ta, tb
    for basis, mm in zip("ZX", found):
        if mm is not None:
            return Witness(basis, mm.generator, mm.a, mm.b)
    return None


def check_equivalence(u: Circuit, v: Circuit, *, parallel: bool = False) -> EquivalenceResult:
    if u.n != v.n:
        raise CircuitError(f"width mismatch: {u.n} vs {v.n} qubits")
    t0 = time.perf_counter()
    witness = _decide(u, v, parallel)
    ms = (time.perf_counter() - t0) * 1e3
    return EquivalenceResult(witness is None, witness, u.n, len(u), len(v), ms)


def check_identity(u: Circuit, *, parallel: bool = False) -> EquivalenceResult:
    """Equivalence with the empty circuit; the empty side is never simulated."""
    t0 = time.perf_counter()
    witness = _decide(u, None, parallel)
    ms = (time.perf_counter() - t0) * 1e3
    return EquivalenceResult(witness is None, witness, u.n, len(u), 0, ms)
