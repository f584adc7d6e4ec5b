import math

import numpy as np
import pytest

from interlace_lab.analysis import (
    CrossCheckError,
    Outcome,
    Status,
    Theorem,
    classify_interlacing,
    critical_points,
    t2_2_threshold,
    theorem_pair,
    verify_theorem,
)
from interlace_lab.laguerre import InvalidParameterError, LagParam
from interlace_lab.zeros import ZeroSet, zeros_of

GRID_ALPHA = [-0.9] + [k / 2 for k in range(-1, 39)]


class TestClassify:
    def test_full_table_rows(self):
        rep = classify_interlacing(zeros_of(7, 17.0), zeros_of(8, 18.0))
        assert rep.status is Status.FULL and rep.gap_interval is None
        # consecutive degrees: one interval between each pair of outer zeros
        assert rep.intervals_checked == 7

    def test_gap(self):
        rep = classify_interlacing(zeros_of(7, 0.0), zeros_of(8, 1.0), points=(8.0,))
        assert rep.status is Status.PARTIAL_WITH_GAP
        lo, hi = rep.gap_interval
        assert (f"{lo:.3g}", f"{hi:.3g}") == ("5.18", "8.16")
        assert rep.point_in_gap == 8.0

    def test_trivial_full(self):
        rep = classify_interlacing(zeros_of(1, 0.0), zeros_of(2, 0.0))
        assert rep.status is Status.FULL and rep.intervals_checked == 1

    def test_degree_mismatch(self):
        with pytest.raises(InvalidParameterError):
            classify_interlacing(zeros_of(3, 0.0), zeros_of(5, 0.0))
        with pytest.raises(InvalidParameterError):
            classify_interlacing(zeros_of(5, 0.0), zeros_of(3, 0.0))

    def test_non_structured(self):
        # zeros of a much larger parameter sit far to the right
        rep = classify_interlacing(zeros_of(6, 60.0), zeros_of(6, 0.0))
        assert rep.status is Status.NON_STRUCTURED

    def test_common_zeros_reported_and_dropped(self):
        rep = classify_interlacing(zeros_of(1, 5.0), zeros_of(2, 2.0))
        assert rep.common_zeros == [(0, 1)]
        assert rep.leftover == 0 and sum(rep.counts) == 0

    def test_self_comparison_equal_degree(self):
        z = zeros_of(4, 1.0)
        rep = classify_interlacing(z, z)
        assert len(rep.common_zeros) == 4


class TestCriticalPoints:
    def test_t2_1(self):
        for a in (0.0, 3.5, 19.0):
            c = critical_points(Theorem.T2_1, LagParam(7, a))
            assert c.points == (8.0,) and c.source_poly == ()

    def test_t2_2(self):
        c = critical_points("T2_2", LagParam(5, 43.0))
        assert c.points == (pytest.approx(6 + math.sqrt(300)),)
        assert len(c.excluded) == 1 and c.excluded[0] < 0
        # a1 is a root of the coefficient quadratic
        c0, c1, c2 = c.source_poly
        a1 = c.points[0]
        assert abs(c2 * a1 * a1 + c1 * a1 + c0) < 1e-9 * a1 * a1

    def test_t3_1(self):
        c = critical_points(Theorem.T3_1, LagParam(7, 0.0))
        assert c.points == pytest.approx((3 - math.sqrt(7), 3 + math.sqrt(7)))
        c = critical_points(Theorem.T3_1, LagParam(7, 1.0))
        assert c.points == pytest.approx((2.0, 3.0))

    def test_t3_1_sign_rule(self):
        for n in range(1, 31):
            for a in GRID_ALPHA:
                c = critical_points(Theorem.T3_1, LagParam(n, a))
                assert len(c.points) in (0, 2)
                assert c.complex_pair_present == (len(c.points) == 0)
                if c.points:
                    assert all((v > 0) == (a + 1 < n) for v in c.points)

    def test_t4_1(self):
        c = critical_points(Theorem.T4_1, LagParam(3, 10.0))
        assert c.points == (44.0,)

    def test_t4_2(self):
        c = critical_points(Theorem.T4_2, LagParam(7, -0.5))
        q = c.points[0]
        assert abs(q - 0.0868) < 5e-5
        assert 7 * q * q + 21 * q - 15 / 8 == pytest.approx(0, abs=1e-14)
        assert 0.0851 < q < 0.7721
        assert c.excluded[0] < 0

    def test_t3_2(self):
        c = critical_points(Theorem.T3_2, LagParam(3, 10.0))
        assert c.complex_pair_present and len(c.points) == 1
        assert c.closed_form_discrepancy < 1e-8
        assert len(c.roots) == 3 and len(c.closed_form) == 3

    def test_r2_3_roots_solve_printed_cubic(self):
        c = critical_points(Theorem.R2_3, LagParam(7, 0.0))
        poly = np.polynomial.Polynomial(c.source_poly)
        for r in c.roots:
            assert abs(poly(r)) <= 1e-9 * max(1.0, abs(r)) ** 3

    def test_t3_2_cross_check_raises(self, monkeypatch):
        import interlace_lab.analysis as an

        monkeypatch.setattr(an, "shift_four_radicals", lambda n, a: (1e3, 2e3, 3e3))
        monkeypatch.setattr(an, "shift_four_h", lambda n, a: (1.0, 1.0, 1.0))
        with pytest.raises(CrossCheckError):
            critical_points(Theorem.T3_2, LagParam(3, 10.0))

    def test_degree_zero(self):
        with pytest.raises(InvalidParameterError):
            critical_points(Theorem.T4_1, LagParam(0, 1.0))


class TestVerdictExamples:
    def test_t2_1_gap(self):
        v = verify_theorem(Theorem.T2_1, 7, 0.0)
        assert v.outcome is Outcome.PASS
        assert v.observed_status is Status.PARTIAL_WITH_GAP
        lo, hi = v.gap()
        assert lo < 8 < hi and f"{lo:.3g}" == "5.18" and f"{hi:.3g}" == "8.16"
        assert v.report.point_in_gap == 8.0
        assert f"{zeros_of(8, 1.0)[0]:.3g}" == "0.409"

    def test_t2_2_full(self):
        v = verify_theorem("T2_2", 5, 43)
        assert v.outcome is Outcome.PASS and v.observed_status is Status.FULL
        assert v.critical.points[0] < zeros_of(6, 45.0)[0]
        assert round(float(zeros_of(6, 45.0)[0]), 4) == 29.3629

    def test_t4_2_full(self):
        v = verify_theorem(Theorem.T4_2, 6, 140)
        assert v.outcome is Outcome.PASS and v.observed_status is Status.FULL
        assert v.critical.points[0] > 188.141

    def test_t4_2_gap(self):
        v = verify_theorem(Theorem.T4_2, 8, 50)
        assert v.outcome is Outcome.PASS and v.observed_status is Status.PARTIAL_WITH_GAP
        lo, hi = v.gap()
        assert (round(lo, 3), round(hi, 3)) == (79.455, 92.849)
        assert lo < v.critical.points[0] < hi

    def test_t4_1_printed_family_reported(self):
        v = verify_theorem(Theorem.T4_1, 3, 10)
        assert v.outcome is Outcome.PASS and v.observed_status is Status.FULL
        assert "printed family" in v.notes

    def test_r2_3_census_only(self):
        v = verify_theorem(Theorem.R2_3, 7, 0.0)
        assert v.outcome is Outcome.SKIPPED and "census only" in v.notes
        assert len(v.census) == 8

    def test_common_zero_skip(self):
        v = verify_theorem(Theorem.T4_1, 2, 2.0)
        assert v.outcome is Outcome.SKIPPED and "common zeros" in v.notes

    def test_boundary_skip(self, monkeypatch):
        import interlace_lab.analysis as an

        real = an.critical_points

        def on_endpoint(t, p):
            c = real(t, p)
            w1 = float(zeros_of(p.n + 1, p.alpha + 1)[0])
            return an.CriticalPointSet(c.theorem, c.param, (w1 * (1 + 1e-13),), False, ())

        monkeypatch.setattr(an, "critical_points", on_endpoint)
        v = an.verify_theorem(Theorem.T2_1, 7, 0.0)
        assert v.outcome is Outcome.SKIPPED and v.notes.startswith("boundary")

    def test_degree_hypotheses(self):
        with pytest.raises(InvalidParameterError):
            verify_theorem(Theorem.T2_1, 0, 0.0)
        with pytest.raises(InvalidParameterError):
            verify_theorem(Theorem.T3_2, 2, 0.0)
        with pytest.raises(InvalidParameterError):
            verify_theorem(Theorem.T4_1, 1, 0.0)
        with pytest.raises(InvalidParameterError):
            verify_theorem("T9_9", 3, 0.0)

    def test_failure_is_detected(self, monkeypatch):
        import interlace_lab.analysis as an

        real = an.critical_points

        def wrong_point(t, p):
            c = real(t, p)
            return an.CriticalPointSet(c.theorem, c.param, (c.points[0] + 30.0,), False, ())

        monkeypatch.setattr(an, "critical_points", wrong_point)
        v = an.verify_theorem(Theorem.T2_1, 7, 0.0)
        assert v.outcome is Outcome.FAIL and "dichotomy" in v.notes
        assert v.reproduction == "T2_1 n=7 alpha=0.0"


def test_pairs():
    p = LagParam(5, 1.0)
    assert theorem_pair(Theorem.T2_1, p) == (p, LagParam(6, 2.0))
    assert theorem_pair(Theorem.T3_2, p) == (p, LagParam(5, 5.0))
    assert theorem_pair(Theorem.T4_1, p) == (LagParam(4, 4.0), p)
    assert theorem_pair(Theorem.T4_2, p) == (LagParam(4, 5.0), p)


class TestGridInvariants:
    def test_t2_1_dichotomy_and_iff(self):
        for n in range(2, 31):
            for a in GRID_ALPHA:
                v = verify_theorem(Theorem.T2_1, n, a)
                assert v.outcome is Outcome.PASS, v.reproduction
                assert len(v.census) == n + 1
                assert all(c.elements == 1 for c in v.census)
                z1 = float(zeros_of(n + 1, a + 1)[0])
                assert (v.observed_status is Status.FULL) == (z1 > n + 1)

    def test_t3_1(self):
        for n in range(2, 31):
            for a in GRID_ALPHA:
                v = verify_theorem(Theorem.T3_1, n, a)
                assert v.outcome is not Outcome.FAIL, v.reproduction
                if a + 1 >= n:
                    assert v.observed_status is Status.FULL
                elif n >= 3:
                    assert sum(1 for c in v.census if len(c.zeros) == 1) >= n - 2

    def test_t4_1_corrected_dichotomy(self):
        for n in range(2, 31):
            for a in GRID_ALPHA:
                v = verify_theorem(Theorem.T4_1, n, a)
                if v.outcome is Outcome.SKIPPED:
                    assert "common zeros" in v.notes
                    continue
                assert v.outcome is Outcome.PASS, v.reproduction
                assert all(c.elements == 1 for c in v.census)

    def test_t4_1_leading_interval_always_empty(self):
        # the leading interval (0, x1) never holds a zero of L_{n-1}^(a+3) or k_n
        for n in range(2, 31):
            for a in GRID_ALPHA:
                x1 = float(zeros_of(n, a)[0])
                assert float(zeros_of(n - 1, a + 3)[0]) > x1
                assert (a + 1) * (a + 2) / n > x1

    def test_t4_2_at_most_one_gap(self):
        for n in range(2, 31):
            for a in GRID_ALPHA + [43, 50, 100, 140]:
                v = verify_theorem(Theorem.T4_2, n, a)
                if v.outcome is Outcome.SKIPPED:
                    continue
                gaps = [c for c in v.census if not c.zeros]
                assert len(gaps) <= 1, v.reproduction
                for g in gaps:
                    assert g.lo < v.critical.points[0] < g.hi

    def test_t3_2_sufficient(self):
        for n in range(3, 31):
            for a in GRID_ALPHA:
                assert verify_theorem(Theorem.T3_2, n, a).outcome is Outcome.PASS

    @pytest.mark.parametrize("t", [0.5, 1.0, 1.5, 2.0])
    def test_equal_degree_shift(self, t):
        for n in range(2, 31):
            for a in GRID_ALPHA:
                rep = classify_interlacing(zeros_of(n, a), zeros_of(n, a + t))
                assert rep.status is Status.FULL, (n, a, t)


def test_t2_2_threshold():
    for n in (1, 3, 6):
        a0 = t2_2_threshold(n)
        assert a0 is not None
        w1 = lambda a: float(zeros_of(n + 1, a + 2)[0])
        a1 = lambda a: n + 1 + math.sqrt((n + 1) * (n + a + 2))
        assert a1(a0 * 1.001 + 0.01) < w1(a0 * 1.001 + 0.01)
        assert a1(a0 * 0.999 - 0.01) >= w1(a0 * 0.999 - 0.01)


def test_zero_set_type():
    assert isinstance(zeros_of(3, 1.0), ZeroSet)
