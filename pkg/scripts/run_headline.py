"""Time the n=1000, depth=10000 equivalent pair (and its non-equivalent twin)."""

import argparse
import time

from cliffeq import Circuit, check_equivalence
from cliffeq.randgen import GenConfig, gen_pair


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qubits", type=int, default=1000)
    ap.add_argument("--depth", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=6)
    ap.add_argument("--parallel", action="store_true")
    args = ap.parse_args()

    check_equivalence(Circuit.empty(2), Circuit.empty(2))  # jit warm-up
    for kind in ("equivalent", "nonequivalent"):
        t0 = time.perf_counter()
        u, v = gen_pair(GenConfig(args.qubits, args.depth, seed=args.seed, pair_kind=kind))
        gen_s = time.perf_counter() - t0
        r = check_equivalence(u, v, parallel=args.parallel)
        print(f"{kind:14s} m_u={r.m_u} m_v={r.m_v} gen={gen_s:.2f}s check={r.time_ms / 1e3:.2f}s -> {r.verdict}")


if __name__ == "__main__":
    main()
