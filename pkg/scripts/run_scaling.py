"""Both scaling sweeps as CSV, plus fitted log-log slopes.

    python scripts/run_scaling.py --outdir results/
"""

import argparse
import pathlib

from cliffeq.bench import loglog_slope, run_sweep
from cliffeq.randgen import GenConfig


def slope_of(records, kind, key):
    pts = [(getattr(r, key), r.wall_ms) for r in records if r.pair_kind == kind]
    return loglog_slope([p[0] for p in pts], [p[1] for p in pts])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-qubits", type=int, default=4096)
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    qubits = [q for q in (16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192) if q <= args.max_qubits]
    with open(out / "sweep_qubits.csv", "w") as fh:
        recs = run_sweep("qubits", qubits, GenConfig(2, 10, seed=args.seed), args.reps, out=fh)
    for kind in ("equivalent", "nonequivalent"):
        print(f"qubits sweep (depth 10) {kind}: slope {slope_of(recs, kind, 'n'):.3f}")

    depths = [100, 200, 500, 1000, 2000, 5000, 10_000]
    with open(out / "sweep_depth.csv", "w") as fh:
        recs = run_sweep("depth", depths, GenConfig(256, 1, seed=args.seed), args.reps, out=fh)
    for kind in ("equivalent", "nonequivalent"):
        print(f"depth sweep (n 256) {kind}: slope {slope_of(recs, kind, 'depth'):.3f}")


if __name__ == "__main__":
    main()
