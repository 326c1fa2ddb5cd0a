import csv
import io

import pytest

from cliffeq.bench import CSV_HEADER, loglog_slope, run_point, run_sweep, time_interleaved
from cliffeq.randgen import GenConfig, gen_equivalent_pair, gen_nonequivalent_pair


def test_smoke_point():
    rec = run_point(GenConfig(2, 1, seed=1, pair_kind="equivalent"), reps=3)
    assert rec.verdict == "Equivalent"
    assert rec.reps == 3 and rec.wall_ms >= 0


def test_sweep_csv_stream():
    buf = io.StringIO()
    recs = run_sweep("depth", [1, 2, 4], GenConfig(3, 1, seed=7), reps=3, out=buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) == 1 + len(recs) == 7
    for rec, row in zip(recs, rows[1:]):
        assert row[3] == rec.pair_kind
        assert row[4] == ("Equivalent" if rec.pair_kind == "equivalent" else "NotEquivalent")
        assert int(row[1]) == rec.depth


def test_sweep_over_qubits_sets_n():
    recs = run_sweep("qubits", [2, 5], GenConfig(1, 3, seed=0), reps=3, kinds=["equivalent"])
    assert [r.n for r in recs] == [2, 5]
    assert all(r.depth == 3 for r in recs)


def test_m_counts_both_circuits():
    cfg = GenConfig(4, 3, seed=2)
    a, b = gen_equivalent_pair(cfg)
    assert run_point(cfg, 3).m == len(a) + len(b)


@pytest.mark.parametrize(
    "kwargs",
    [dict(axis="width"), dict(values=[3, 1]), dict(reps=2)],
)
def test_sweep_validation(kwargs):
    args = dict(axis="depth", values=[1, 2], fixed=GenConfig(2, 1), reps=3)
    args.update(kwargs)
    with pytest.raises(ValueError):
        run_sweep(**args)


def test_loglog_slope():
    assert loglog_slope([10, 100, 1000], [2, 20, 200]) == pytest.approx(1.0)
    assert loglog_slope([1, 2, 4], [1, 4, 16]) == pytest.approx(2.0)


def test_time_interleaved():
    cfg = GenConfig(8, 20, seed=3)
    eq = gen_equivalent_pair(cfg)
    ne = gen_nonequivalent_pair(GenConfig(8, 20, seed=3, pair_kind="nonequivalent"))
    medians = time_interleaved([eq, ne], reps=3)
    assert len(medians) == 2 and all(m > 0 for m in medians)


def test_doubling_depth_doubles_time():
    recs = run_sweep("depth", [1000, 2000], GenConfig(256, 1, seed=1), reps=5, kinds=["equivalent"])
    ratio = recs[1].wall_ms / recs[0].wall_ms
    assert 1.5 <= ratio <= 2.5
