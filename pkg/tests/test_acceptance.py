"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` or as part of the full suite;
the lines are written to the terminal either way.
"""

import json
import math
import time
from pathlib import Path

import numpy as np
import pytest

import test_properties as props
from interlace_lab.analysis import Outcome, Theorem, critical_points
from interlace_lab.identities import IdentityId, coefficient_polynomials, run_suite
from interlace_lab.laguerre import LagParam
from interlace_lab.sweep import SweepSpec, run_sweep
from interlace_lab.tables import TABLES, TableId, build_table, compare_to_printed
from interlace_lab.zeros import zeros_of
from oracles import oracle_zeros

PRINTED = json.loads((Path(__file__).parent / "data" / "printed_tables.json").read_text())["tables"]
ZERO_REL = 1e-9
IDENTITY_TOL = 1e-9
SWEEP_N = "2..30"
SWEEP_ALPHA = "-0.9,-0.5,0..19:0.5,43,50,100,140"


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


def _table_check(tid):
    fails, notes = compare_to_printed(build_table(tid), PRINTED[tid.value])
    return fails, notes


def test_1_tables_one_and_two(report):
    t0 = time.perf_counter()
    results = {t: _table_check(t) for t in (TableId.T1, TableId.T2)}
    dt = time.perf_counter() - t0
    shapes = [(len(build_table(t).rows), len(build_table(t).rows[0].cells)) for t in results]
    fails = [f for fs, _ in results.values() for f in fs]
    ok = not fails and shapes == [(20, 8), (20, 7)] and dt < 1.0
    report(1, ok, f"T1/T2 values and boxes, {len(fails)} mismatches, {dt:.3f} s (limit 1 s)")


def test_2_tables_three_to_seven(report):
    tids = [TableId.T3, TableId.T4, TableId.T5, TableId.T6, TableId.T7]
    fails = [f for t in tids for f in _table_check(t)[0]]
    notes = {t: build_table(t).notes for t in tids}
    claims = {
        "T3 full, a1<w1": "status Full" in notes[TableId.T3][0] and "<" in notes[TableId.T3][1],
        "T4 full, a1<w1": "status Full" in notes[TableId.T4][0] and "<" in notes[TableId.T4][1],
        "T5 gap": "(0.0851154, 0.772138) holds q+" in notes[TableId.T5][2],
        "T7 gap": "(79.455, 92.8492) holds q+" in notes[TableId.T7][2],
        "T6 full": "status Full" in notes[TableId.T6][0],
    }
    q6 = critical_points(Theorem.T4_2, LagParam(6, 140.0)).points[0]
    claims["T6 q+ > 188.141"] = q6 > 188.141
    for t, box in [(TableId.T5, ["0.0851", "0.7721"]), (TableId.T7, ["79.455", "92.849"])]:
        claims[f"{t.value} boxes"] = [c.text for c in build_table(t).rows[0].cells if c.boxed] == box
    worst = 0.0
    for tid in TableId:
        for row in TABLES[tid].rows:
            n, a = row.param.n, row.param.alpha
            ref = np.array([float(z) for z in oracle_zeros(n, a)])
            worst = max(worst, float(np.max(np.abs(zeros_of(n, a).zeros - ref) / ref)))
    bad = [k for k, v in claims.items() if not v]
    ok = not fails and not bad and worst <= ZERO_REL
    report(2, ok, f"T3-T7 {len(fails)} mismatches, claims failing {bad}, "
                  f"worst zero rel error {worst:.2e} (limit {ZERO_REL:g})")


def test_3_theorem_sweeps(report):
    t0 = time.perf_counter()
    lines, ok = [], True
    for name in ("T2_1", "T2_2", "T3_1", "T4_1", "T4_2"):
        res = run_sweep(SweepSpec.parse(name, SWEEP_N, SWEEP_ALPHA))
        skips_ok = all(v.notes.startswith(("common zeros", "boundary")) for v in res.skipped)
        ok &= res.counts[Outcome.FAIL] == 0 and skips_ok and len(res.verdicts) == 29 * 45
        lines.append(res.summary())
        lines.extend(f"  Skipped {v.reproduction}: {v.notes}" for v in res.skipped)
    dt = time.perf_counter() - t0
    ok &= dt < 60.0
    report(3, ok, f"five sweeps in {dt:.1f} s (limit 60 s)\n" + "\n".join(lines))


def test_4_identity_suite(report):
    rows = run_suite(samples=200, tol=IDENTITY_TOL)
    worst_r = max(r.max_residual for r in rows)
    worst_d = max(r.max_discrepancy for r in rows)
    flagged = [r.id.value for r in rows if not r.passed]
    ok = len(rows) == len(IdentityId) == 18 and not flagged
    report(4, ok, f"{len(rows)} tags x 200 samples, worst residual {worst_r:.2e}, "
                  f"worst printed vs composed {worst_d:.2e}, flagged {flagged}")


def test_5_spot_checks(report):
    n, a = 7, -0.5
    cp = critical_points(Theorem.T4_2, LagParam(n, a))
    # quadratic-formula oracle on the coefficient polynomial
    q = dict(coefficient_polynomials(IdentityId.EQ_4_8, LagParam(n, a)))["q"]
    c0, c1, c2 = (float(v) for v in q)
    disc = c1 * c1 - 4 * c2 * c0
    q_plus = max((-c1 + s * math.sqrt(disc)) / (2 * c2) for s in (1, -1))
    checks = {
        "q+(7,-1/2) in (0.0851,0.7721)": 0.0851 < q_plus < 0.7721 and math.isclose(cp.points[0], q_plus, rel_tol=1e-12),
    }
    a1 = critical_points(Theorem.T2_2, LagParam(5, 43.0)).points[0]
    checks["a1(5,43) = 6+sqrt(300) < 29.3629"] = math.isclose(a1, 6 + math.sqrt(300), rel_tol=1e-13) and a1 < 29.3629
    r70 = critical_points(Theorem.T3_1, LagParam(7, 0.0)).points
    checks["T3_1(7,0) = 3 +- sqrt(7)"] = np.allclose(sorted(r70), [3 - math.sqrt(7), 3 + math.sqrt(7)], rtol=1e-13)
    r71 = critical_points(Theorem.T3_1, LagParam(7, 1.0)).points
    checks["T3_1(7,1) = 2, 3"] = np.allclose(sorted(r71), [2.0, 3.0], rtol=1e-13)
    bad = [k for k, v in checks.items() if not v]
    report(5, not bad, f"q+ = {q_plus:.7f}, a1 = {a1:.7f}, failing {bad}")


def test_6_property_suites(report):
    suites = [
        props.test_classical_interlacing,
        props.test_markov_monotone,
        props.test_equal_degree_shift_up_to_two,
        props.test_consecutive_degree_shift_up_to_two,
        props.test_t2_1_dichotomy_and_iff,
        props.test_t4_2_at_most_one_gap,
    ]
    failed = []
    for fn in suites:
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - any failure counts
            failed.append(f"{fn.__name__}: {type(exc).__name__}")
    report(6, not failed, f"{len(suites)} property suites, failing {failed}")
