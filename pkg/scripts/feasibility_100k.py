"""Memory estimate (and optional attempt) for the n=100000, depth=10 point.

Each full tableau is 2*n*n bits. The default check keeps two alive at once,
about 4.7 GiB at n=100000. Pass --run to attempt it anyway; an out-of-memory
failure is reported rather than hidden.
"""

import argparse
import os
import time

from cliffeq import check_equivalence
from cliffeq.randgen import GenConfig, gen_pair


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qubits", type=int, default=100_000)
    ap.add_argument("--depth", type=int, default=10)
    ap.add_argument("--run", action="store_true")
    args = ap.parse_args()

    n = args.qubits
    words = (n + 63) // 64
    per_tableau = 2 * n * words * 8
    avail = os.sysconf("SC_AVPHYS_PAGES") * os.sysconf("SC_PAGE_SIZE")
    print(f"n={n}: {per_tableau / 2**30:.2f} GiB per tableau, {2 * per_tableau / 2**30:.2f} GiB for two")
    print(f"available: {avail / 2**30:.2f} GiB")
    if not args.run:
        print("feasible" if 2 * per_tableau < 0.9 * avail else "not feasible on this machine (pass --run to try)")
        return
    u, v = gen_pair(GenConfig(n, args.depth, seed=0))
    t0 = time.perf_counter()
    try:
        r = check_equivalence(u, v)
    except MemoryError:
        print(f"out of memory at n={n}, depth={args.depth}")
        return
    print(f"{r.verdict} in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
