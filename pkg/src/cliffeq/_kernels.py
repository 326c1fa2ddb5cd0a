"""Compiled inner loops for the packed tableau.

Layout: ``x[j, w]`` / ``z[j, w]`` hold generator bits ``64*w .. 64*w+63``
of qubit column ``j``; ``s[w]`` holds the matching sign bits (1 = minus).
Bits past ``n`` in the last word are always zero.  A column with
``init[j] == 0`` has never been written and reads as its basis default:
generator ``j`` carries Z (``basis == 0``) or X (``basis == 1``) on qubit
``j``, every other generator carries I.

``writes[j]`` counts column writes for instrumentation.
"""

import numpy as np
from numba import njit

OP_H = 0
OP_S = 1
OP_CNOT = 2

BASIS_Z = 0
BASIS_X = 1


@njit(cache=True, nogil=True, inline="always")
def _materialize(x, z, init, basis, j):
    x[j, :] = 0
    z[j, :] = 0
    bit = np.uint64(1) << np.uint64(j & 63)
    if basis == BASIS_Z:
        z[j, j >> 6] = bit
    else:
        x[j, j >> 6] = bit
    init[j] = 1


@njit(cache=True, nogil=True)
def materialize(x, z, init, basis, j):
    if not init[j]:
        _materialize(x, z, init, basis, j)


@njit(cache=True, nogil=True, inline="always")
def _h(x, z, s, j):
    for w in range(s.shape[0]):
        xv = x[j, w]
        zv = z[j, w]
        s[w] ^= xv & zv
        x[j, w] = zv
        z[j, w] = xv


@njit(cache=True, nogil=True, inline="always")
def _s(x, z, s, j):
    for w in range(s.shape[0]):
        xv = x[j, w]
        zv = z[j, w]
        s[w] ^= xv & zv
        z[j, w] = zv ^ xv


@njit(cache=True, nogil=True, inline="always")
def _cnot(x, z, s, c, t):
    for w in range(s.shape[0]):
        xc = x[c, w]
        zc = z[c, w]
        xt = x[t, w]
        zt = z[t, w]
        s[w] ^= xc & zt & ~(xt ^ zc)
        x[t, w] = xt ^ xc
        z[c, w] = zc ^ zt


@njit(cache=True, nogil=True)
def run(x, z, s, init, basis, ops, q0, q1, writes):
    for k in range(ops.shape[0]):
        op = ops[k]
        a = q0[k]
        if not init[a]:
            _materialize(x, z, init, basis, a)
        if op == OP_H:
            _h(x, z, s, a)
            writes[a] += 1
        elif op == OP_S:
            _s(x, z, s, a)
            writes[a] += 1
        else:
            b = q1[k]
            if not init[b]:
                _materialize(x, z, init, basis, b)
            _cnot(x, z, s, a, b)
            writes[a] += 1
            writes[b] += 1


@njit(cache=True, nogil=True, inline="always")
def _word(cols, init, basis, want, j, w):
    # Word w of column j, reading an unwritten column as its basis default.
    if init[j]:
        return cols[j, w]
    if basis == want and (j >> 6) == w:
        return np.uint64(1) << np.uint64(j & 63)
    return np.uint64(0)


@njit(cache=True, nogil=True)
def first_mismatch(xa, za, sa, inita, xb, zb, sb, initb, basis):
    """Smallest generator index whose rows differ, or -1."""
    nwords = sa.shape[0]
    n = inita.shape[0]
    diff = sa ^ sb
    for j in range(n):
        if not inita[j] and not initb[j]:
            continue
        for w in range(nwords):
            diff[w] |= _word(xa, inita, basis, BASIS_X, j, w) ^ _word(xb, initb, basis, BASIS_X, j, w)
            diff[w] |= _word(za, inita, basis, BASIS_Z, j, w) ^ _word(zb, initb, basis, BASIS_Z, j, w)
    for w in range(nwords):
        d = diff[w]
        if d:
            b = 0
            while not (d >> np.uint64(b)) & np.uint64(1):
                b += 1
            return w * 64 + b
    return -1


@njit(cache=True, nogil=True)
def read_row(x, z, s, init, basis, i, xbits, zbits):
    """Fill boolean arrays with row ``i``; return its sign bit."""
    w = i >> 6
    sh = np.uint64(i & 63)
    for j in range(init.shape[0]):
        xbits[j] = (_word(x, init, basis, BASIS_X, j, w) >> sh) & np.uint64(1)
        zbits[j] = (_word(z, init, basis, BASIS_Z, j, w) >> sh) & np.uint64(1)
    return (s[w] >> sh) & np.uint64(1)
