"""Seeded generation of filled Clifford circuits and labelled pairs.

Randomness comes from numpy's PCG64 bit generator read as raw 64-bit words,
never from distribution methods whose output may change between numpy
releases.  A draw in ``[0, k)`` is ``word % k``; the bias is below
``k / 2^64`` and is accepted.  The seed is expanded with ``SeedSequence``
into three independent streams: circuit layers, equivalence-preserving
edits, and mutations.

Filled layer scheme (``2n`` words per layer, unused words discarded):

* words ``0 .. n-2`` drive a Fisher-Yates shuffle of the qubits
  (``for i = n-1 .. 1: swap(perm[i], perm[word % (i+1)])``);
* words ``n-1 .. 2n-2`` pick the gate at each position of the shuffled
  order: ``word % 3`` in ``{H, S, CNOT}`` when an unconsumed partner follows,
  else ``word % 2`` in ``{H, S}``.  A CNOT takes the current qubit as control
  and the next one in the order as target, consuming both.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from numba import njit

from .circuit import Circuit, OP_CNOT, OP_H, OP_S
from .equivalence import check_equivalence

_STREAM_LAYERS, _STREAM_EDITS, _STREAM_MUTATIONS = range(3)
MAX_MUTATION_RETRIES = 64
_LAYER_CHUNK_WORDS = 1 << 22


@dataclass(frozen=True)
class GenConfig:
    n: int
    depth: int
    seed: int = 0
    pair_kind: str = "equivalent"  # "equivalent" | "nonequivalent" | "single"
    insertion_count: int = 4
    mutation_count: int = 1

    def __post_init__(self):
        if self.n < 1 or self.depth < 1:
            raise ValueError(f"need n >= 1 and depth >= 1, got n={self.n}, depth={self.depth}")
        if self.pair_kind not in ("equivalent", "nonequivalent", "single"):
            raise ValueError(f"unknown pair kind {self.pair_kind!r}")
        if self.insertion_count < 0 or self.mutation_count < 1:
            raise ValueError("insertion_count must be >= 0 and mutation_count >= 1")


class Stream:
    """Raw PCG64 words with the modulo reduction described above."""

    def __init__(self, seed: int, index: int):
        ss = np.random.SeedSequence(seed).spawn(3)[index]
        self._bg = np.random.PCG64(ss)

    def words(self, k: int) -> np.ndarray:
        return np.asarray(self._bg.random_raw(k), dtype=np.uint64)

    def below(self, k: int) -> int:
        return int(self._bg.random_raw()) % k


@njit(cache=True)
def _fill_layers(n, layers, words, ops, q0, q1, start):
    perm = np.arange(n)
    pos = start
    w = 0
    for _ in range(layers):
        for i in range(n - 1, 0, -1):
            j = words[w + (n - 1 - i)] % np.uint64(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        cw = w + n - 1
        p = 0
        while p < n:
            has_partner = p + 1 < n
            r = words[cw + p] % np.uint64(3 if has_partner else 2)
            if r == 2:
                ops[pos] = OP_CNOT
                q0[pos] = perm[p]
                q1[pos] = perm[p + 1]
                p += 2
            else:
                ops[pos] = OP_H if r == 0 else OP_S
                q0[pos] = perm[p]
                q1[pos] = -1
                p += 1
            pos += 1
        w += 2 * n
    return pos


def gen_filled(cfg: GenConfig) -> Circuit:
    n, d = cfg.n, cfg.depth
    stream = Stream(cfg.seed, _STREAM_LAYERS)
    ops = np.empty(n * d, dtype=np.uint8)
    q0 = np.empty(n * d, dtype=np.int32)
    q1 = np.empty(n * d, dtype=np.int32)
    per_chunk = max(1, _LAYER_CHUNK_WORDS // (2 * n))
    pos, done = 0, 0
    while done < d:
        layers = min(per_chunk, d - done)
        words = stream.words(2 * n * layers)
        pos = _fill_layers(n, layers, words, ops, q0, q1, pos)
        done += layers
    return Circuit(n, ops[:pos], q0[:pos], q1[:pos])


# Equivalence-preserving edits: H;H, S^4, CNOT;CNOT, (H;S)^3 (a pure phase),
# and exchanging two adjacent gates on disjoint qubits.
_EDITS = ("HH", "SSSS", "CNOTCNOT", "HS3", "SWAP_ADJACENT")


def _block(edit: str, a: int, b: int):
    if edit == "HH":
        return [(OP_H, a, -1)] * 2
    if edit == "SSSS":
        return [(OP_S, a, -1)] * 4
    if edit == "CNOTCNOT":
        return [(OP_CNOT, a, b)] * 2
    if edit == "HS3":
        return [(OP_H, a, -1), (OP_S, a, -1)] * 3
    raise AssertionError(edit)


def _support(op, a, b):
    return {a} if op != OP_CNOT else {a, b}


def apply_edit(c: Circuit, edit: str, stream: Stream) -> Circuit:
    """Apply one equivalence-preserving edit drawn from ``stream``."""
    n = c.n
    ops, q0, q1 = c.ops, c.q0, c.q1
    if edit == "SWAP_ADJACENT":
        if len(c) >= 2:
            i = stream.below(len(c) - 1)
            if not _support(ops[i], q0[i], q1[i]) & _support(ops[i + 1], q0[i + 1], q1[i + 1]):
                order = np.arange(len(c))
                order[i], order[i + 1] = i + 1, i
                return Circuit(n, ops[order], q0[order], q1[order])
        # No commuting neighbours at the drawn spot: fall back to H;H.
        edit = "HH"
    a = stream.below(n)
    b = -1
    if edit == "CNOTCNOT":
        if n < 2:
            edit = "SSSS"
        else:
            b = (a + 1 + stream.below(n - 1)) % n
    at = stream.below(len(c) + 1)
    blk = np.array(_block(edit, a, b), dtype=np.int64)
    return Circuit(
        n,
        np.insert(ops, at, blk[:, 0]),
        np.insert(q0, at, blk[:, 1]),
        np.insert(q1, at, blk[:, 2]),
    )


def gen_equivalent_pair(cfg: GenConfig) -> tuple[Circuit, Circuit]:
    c = gen_filled(cfg)
    stream = Stream(cfg.seed, _STREAM_EDITS)
    other = c
    for _ in range(cfg.insertion_count):
        other = apply_edit(other, _EDITS[stream.below(len(_EDITS))], stream)
    return c, other


def mutate(c: Circuit, count: int, stream: Stream) -> Circuit:
    """Replace ``count`` distinct gates by a different gate on the same qubits.

    H <-> S on single qubits; CNOT(a, b) -> CNOT(b, a).
    """
    ops, q0, q1 = c.ops.copy(), c.q0.copy(), c.q1.copy()
    count = min(count, len(c))
    chosen: set[int] = set()
    while len(chosen) < count:
        chosen.add(stream.below(len(c)))
    for i in sorted(chosen):
        if ops[i] == OP_CNOT:
            q0[i], q1[i] = q1[i], q0[i]
        else:
            ops[i] = OP_S if ops[i] == OP_H else OP_H
    return Circuit(c.n, ops, q0, q1)


def gen_nonequivalent_pair(cfg: GenConfig) -> tuple[Circuit, Circuit]:
    c = gen_filled(cfg)
    stream = Stream(cfg.seed, _STREAM_MUTATIONS)
    for _ in range(MAX_MUTATION_RETRIES):
        other = mutate(c, cfg.mutation_count, stream)
        if not check_equivalence(c, other):
            return c, other
    raise RuntimeError(
        f"no non-equivalent mutation found after {MAX_MUTATION_RETRIES} tries ({cfg})"
    )


def gen_pair(cfg: GenConfig) -> tuple[Circuit, Circuit]:
    if cfg.pair_kind == "equivalent":
        return gen_equivalent_pair(cfg)
    if cfg.pair_kind == "nonequivalent":
        return gen_nonequivalent_pair(cfg)
    raise ValueError("gen_pair needs pair_kind 'equivalent' or 'nonequivalent'")


def with_kind(cfg: GenConfig, kind: str) -> GenConfig:
    return replace(cfg, pair_kind=kind)
