"""Exact equivalence checking of Clifford circuits via stabilizer tableaux."""

from .circuit import Circuit, Gate, ParseError, gate_count, inverse, parse, serialize
from .equivalence import EquivalenceResult, Witness, check_equivalence, check_identity
from .pauli import PauliString, PhasedPauli, commutes, conjugate_by_gate, pauli_mul
from .tableau import StabilizerTableau, new_basis, tableau_equal

__all__ = [
    "Circuit",
    "EquivalenceResult",
    "Gate",
    "ParseError",
    "PauliString",
    "PhasedPauli",
    "StabilizerTableau",
    "Witness",
    "check_equivalence",
    "check_identity",
    "commutes",
    "conjugate_by_gate",
    "gate_count",
    "inverse",
    "new_basis",
    "parse",
    "pauli_mul",
    "serialize",
    "tableau_equal",
]
