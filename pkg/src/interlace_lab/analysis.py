"""Interlacing classification, critical points and theorem verdicts.

Every theorem compares an ``inner`` zero set with an ``outer`` one and names
an extra point (or the real roots of a small polynomial) that fills the one
interval an inner zero may leave empty.
"""

from __future__ import annotations

import cmath
import enum
import itertools
import math
from dataclasses import dataclass, field

from interlace_lab.cubic import solve_cubic, shift_four_h, shift_four_radicals
from interlace_lab.identities import IdentityId, coefficient_polynomials
from interlace_lab.laguerre import InvalidParameterError, LagParam
from interlace_lab.zeros import DEFAULT_COMMON_TOL, ZeroSet, compute_zeros, detect_common_zeros

GUARD_REL = 1e-10
RADICAL_AGREE = 1e-8
RADICAL_HARD = 1e-6


class Theorem(enum.Enum):
    T2_1 = "T2_1"
    T2_2 = "T2_2"
    R2_3 = "R2_3"
    T3_1 = "T3_1"
    T3_2 = "T3_2"
    T4_1 = "T4_1"
    T4_2 = "T4_2"


class Status(enum.Enum):
    FULL = "Full"
    PARTIAL_WITH_GAP = "PartialWithGap"
    NON_STRUCTURED = "NonStructured"


class Outcome(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "Skipped"


class CrossCheckError(RuntimeError):
    """Radical and numeric cubic roots disagree beyond any rounding explanation."""


def coerce_theorem(t) -> Theorem:
    if isinstance(t, Theorem):
        return t
    try:
        return Theorem(str(t).upper().replace(".", "_"))
    except ValueError:
        raise InvalidParameterError(f"unknown theorem {t!r}") from None


# (inner shift (dn, dalpha), outer shift, smallest n, interval family)
_SETUP = {
    Theorem.T2_1: ((0, 0), (1, 1), 1, "leading"),
    Theorem.T2_2: ((0, 0), (1, 2), 1, "leading"),
    Theorem.R2_3: ((0, 0), (1, 3), 1, "leading"),
    Theorem.T3_1: ((0, 0), (0, 3), 1, "leading"),
    Theorem.T3_2: ((0, 0), (0, 4), 3, "leading"),
    Theorem.T4_1: ((-1, 3), (0, 0), 2, "trailing"),
    Theorem.T4_2: ((-1, 4), (0, 0), 2, "between"),
}


def theorem_pair(theorem, p: LagParam) -> tuple[LagParam, LagParam]:
    """``(inner, outer)`` polynomials compared by ``theorem`` at base ``p``."""
    t = coerce_theorem(theorem)
    (di, ai), (do, ao), _, _ = _SETUP[t]
    return p.shift(di, ai), p.shift(do, ao)


def min_degree(theorem) -> int:
    return _SETUP[coerce_theorem(theorem)][2]


@dataclass(frozen=True)
class CriticalPointSet:
    """Real extra points of one theorem at one ``(n, alpha)``.

    ``points`` holds every real root of the generating polynomial, sorted;
    ``excluded`` holds roots the theorem discards (negative partners).
    ``roots`` lists all roots including complex ones.
    """

    theorem: Theorem
    param: LagParam
    points: tuple[float, ...]
    complex_pair_present: bool
    source_poly: tuple[float, ...]
    excluded: tuple[float, ...] = ()
    roots: tuple[complex, ...] = ()
    closed_form: tuple[complex, ...] = ()
    closed_form_discrepancy: float | None = None

    @property
    def positive(self) -> tuple[float, ...]:
        return tuple(v for v in self.points if v > 0)


def _quad_roots(A, B, C):
    """Real roots of ``A x^2 + B x + C`` (sorted) or ``None`` for a complex pair."""
    disc = B * B - 4 * A * C
    if disc < 0:
        return None
    s = math.sqrt(disc)
    q = -0.5 * (B + math.copysign(s, B))
    if q == 0:
        return (0.0, 0.0)
    return tuple(sorted((q / A, C / q)))


def _coef(tag: IdentityId, p: LagParam, name: str) -> tuple[float, ...]:
    return tuple(dict(coefficient_polynomials(tag, p))[name])


def _match_multiset(a, b) -> float:
    """Largest relative mismatch under the best pairing of two root triples."""
    best = math.inf
    for perm in itertools.permutations(a):
        worst = max(abs(x - y) / max(1.0, abs(y)) for x, y in zip(perm, b))
        best = min(best, worst)
    return best


def critical_points(theorem, p: LagParam) -> CriticalPointSet:
    t = coerce_theorem(theorem)
    n, a = p.n, p.alpha
    if n < 1:
        raise InvalidParameterError("critical points need n >= 1")
    if t is Theorem.T2_1:
        v = float(n + 1)
        return CriticalPointSet(t, p, (v,), False, (), roots=(complex(v),))
    if t is Theorem.T2_2:
        c0, c1, c2 = _coef(IdentityId.EQ_2_7, p, "a")
        a1 = n + 1 + math.sqrt((n + 1) * (n + a + 2))
        a2 = c0 / a1  # product of roots
        return CriticalPointSet(
            t, p, (a1,), False, (c0, c1, c2), excluded=(a2,), roots=(complex(a2), complex(a1))
        )
    if t is Theorem.T4_1:
        k = (a + 1) * (a + 2) / n
        return CriticalPointSet(t, p, (k,), False, (), roots=(complex(k),))
    if t is Theorem.T4_2:
        src = (-(a + 1) * (a + 2) * (a + 3), 2 * n * (a + 2), float(n))
        qm, qp = _quad_roots(src[2], src[1], src[0])
        return CriticalPointSet(
            t, p, (qp,), False, src, excluded=(qm,), roots=(complex(qm), complex(qp))
        )
    if t is Theorem.T3_1:
        src = _coef(IdentityId.EQ_3_3, p, "a")
        r = _quad_roots(src[2], src[1], src[0])
        if r is None:
            disc = src[1] ** 2 - 4 * src[2] * src[0]
            re, im = -src[1] / (2 * src[2]), math.sqrt(-disc) / (2 * src[2])
            return CriticalPointSet(t, p, (), True, src, roots=(complex(re, im), complex(re, -im)))
        return CriticalPointSet(t, p, r, False, src, roots=tuple(complex(v) for v in r))
    if t is Theorem.R2_3:
        src = _coef(IdentityId.EQ_2_9A, p, "a")
        cr = solve_cubic(src)
        return CriticalPointSet(t, p, cr.real, cr.complex_pair is not None, src, roots=cr.all)
    # T3_2
    src = _coef(IdentityId.EQ_3_11, p, "p3")
    cr = solve_cubic(src)
    radicals = shift_four_radicals(n, a)
    disc = _match_multiset(radicals, cr.all)
    h1, h2, _ = shift_four_h(n, a)
    if (h2 + cmath.sqrt(h1)).real > 0 and disc > RADICAL_HARD:
        raise CrossCheckError(
            f"closed-form cubic roots differ from numeric roots by {disc:.3g} at n={n}, alpha={a}"
        )
    return CriticalPointSet(
        t, p, cr.real, cr.complex_pair is not None, src,
        roots=cr.all, closed_form=radicals, closed_form_discrepancy=disc,
    )


@dataclass(frozen=True)
class IntervalCensus:
    lo: float
    hi: float
    zeros: tuple[float, ...]
    points: tuple[float, ...] = ()

    @property
    def elements(self) -> int:
        return len(self.zeros) + len(self.points)

    def __str__(self) -> str:
        hi = "inf" if math.isinf(self.hi) else f"{self.hi:.6g}"
        return f"({self.lo:.6g}, {hi}): zeros={len(self.zeros)} points={len(self.points)}"


def _band(e: float) -> float:
    return GUARD_REL * max(1.0, abs(e))


def _intervals(outer, family: str):
    z = [float(v) for v in outer]
    pairs = list(zip(z[:-1], z[1:]))
    if family == "leading":
        return [(0.0, z[0])] + pairs
    if family == "trailing":
        return pairs + [(z[-1], math.inf)]
    return pairs


def _census(intervals, zeros, points):
    rows = []
    for lo, hi in intervals:
        rows.append(IntervalCensus(
            lo, hi,
            tuple(v for v in zeros if lo < v < hi),
            tuple(v for v in points if lo < v < hi),
        ))
    return rows


def _boundary_hits(ends, values, label):
    hits = []
    for v in values:
        for e in ends:
            if abs(v - e) <= _band(e):
                hits.append(f"{label} {v:.12g} within guard band of endpoint {e:.12g}")
    return hits


@dataclass(frozen=True)
class InterlacingReport:
    inner: LagParam
    outer: LagParam
    status: Status
    gap_interval: tuple[float, float] | None
    point_in_gap: float | None
    intervals_checked: int
    common_zeros: list = field(default_factory=list)
    counts: tuple[int, ...] = ()
    leftover: int = 0
    boundary: tuple[str, ...] = ()


def classify_interlacing(inner: ZeroSet, outer: ZeroSet, points=(), tol: float = DEFAULT_COMMON_TOL):
    """Count inner zeros in each open interval cut out by the outer zeros.

    With equal counts the leading interval ``(0, z1)`` is included.  Inner
    zeros shared with the outer set (at ``tol``) are dropped before counting
    and listed in ``common_zeros``.  ``points`` only feeds ``point_in_gap``.
    """
    di = outer.count - inner.count
    if di not in (0, 1):
        raise InvalidParameterError(
            f"inner has {inner.count} zeros and outer {outer.count}; counts must differ by 0 or 1"
        )
    common = detect_common_zeros(inner, outer, tol)
    shared = {i for i, _ in common}
    zi = [float(v) for k, v in enumerate(inner.zeros) if k not in shared]
    family = "leading" if di == 0 else "between"
    ivs = _intervals(outer.zeros, family)
    ends = sorted({e for iv in ivs for e in iv if math.isfinite(e)})
    rows = _census(ivs, zi, ())
    counts = tuple(len(r.zeros) for r in rows)
    leftover = len(zi) - sum(counts)
    empty = [k for k, c in enumerate(counts) if c == 0]
    if all(c == 1 for c in counts) and leftover == 0:
        status = Status.FULL
    elif len(empty) == 1 and all(c == 1 for k, c in enumerate(counts) if k != empty[0]):
        status = Status.PARTIAL_WITH_GAP
    else:
        status = Status.NON_STRUCTURED
    gap = None
    pin = None
    if status is Status.PARTIAL_WITH_GAP:
        gap = ivs[empty[0]]
        inside = [v for v in points if gap[0] < v < gap[1]]
        pin = inside[0] if inside else None
    return InterlacingReport(
        inner=inner.param,
        outer=outer.param,
        status=status,
        gap_interval=gap,
        point_in_gap=pin,
        intervals_checked=len(ivs),
        common_zeros=common,
        counts=counts,
        leftover=leftover,
        boundary=tuple(_boundary_hits(ends, zi, "zero")),
    )


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: Theorem
    param: tuple[int, float]
    census: tuple[IntervalCensus, ...]
    observed_status: Status | None
    predicted_status: Status | None
    outcome: Outcome
    notes: str = ""
    checks: dict = field(default_factory=dict)
    critical: CriticalPointSet | None = None
    report: InterlacingReport | None = None

    @property
    def reproduction(self) -> str:
        n, a = self.param
        return f"{self.theorem.value} n={n} alpha={a!r}"

    def gap(self):
        return None if self.report is None else self.report.gap_interval


def _dichotomy(rows) -> bool:
    return all(r.elements == 1 and len(r.zeros) <= 1 for r in rows)


def _t3_2_condition(roots: tuple[float, ...], w1: float) -> bool:
    # one real root below w1, the other two negative or non-real
    nonneg = [r for r in roots if r >= 0]
    return max(roots) < w1 and len(nonneg) <= 1


def verify_theorem(theorem, n: int, alpha: float, tol: float = DEFAULT_COMMON_TOL,
                   precision: str | None = None) -> TheoremVerdict:
    """Check one theorem's full statement at one ``(n, alpha)``.

    Raises ``InvalidParameterError`` below the theorem's degree hypothesis.
    A shared zero or an element inside an endpoint guard band yields
    ``Skipped``; otherwise ``PASS`` iff every check of the statement holds.
    """
    t = coerce_theorem(theorem)
    p = LagParam(n, alpha)
    if p.n < min_degree(t):
        raise InvalidParameterError(f"{t.value} needs n >= {min_degree(t)}, got n={p.n}")
    ip, op = theorem_pair(t, p)
    inner = compute_zeros(ip, precision=precision)
    outer = compute_zeros(op, precision=precision)
    cps = critical_points(t, p)
    pts = cps.positive
    report = classify_interlacing(inner, outer, pts, tol)
    family = _SETUP[t][3]
    ivs = _intervals(outer.zeros, family)
    zi = [float(v) for v in inner.zeros]
    rows = tuple(_census(ivs, zi, pts))
    key = (p.n, p.alpha)
    notes = []
    observed = report.status

    def skipped(reason):
        return TheoremVerdict(t, key, rows, observed, None, Outcome.SKIPPED, reason,
                              critical=cps, report=report)

    if report.common_zeros:
        pairs = ", ".join(f"{inner.zeros[i]:.12g}" for i, _ in report.common_zeros)
        return skipped(f"common zeros at {pairs}")
    ends = sorted({e for iv in ivs for e in iv if math.isfinite(e)})
    hits = _boundary_hits(ends, zi, "zero") + _boundary_hits(ends, pts, "point")
    if hits:
        return skipped("boundary: " + "; ".join(hits))

    x = [float(v) for v in outer.zeros]
    full = observed is Status.FULL
    checks = {}
    predicted = None
    if t is Theorem.T2_1 or t is Theorem.T2_2:
        checks["dichotomy"] = _dichotomy(rows)
        crit = x[0] > p.n + 1 if t is Theorem.T2_1 else pts[0] < x[0]
        checks["iff"] = full == crit
        predicted = Status.FULL if crit else Status.PARTIAL_WITH_GAP
    elif t is Theorem.R2_3:
        notes.append("census only: no verdict is defined for this pair")
        notes.append("; ".join(str(r) for r in rows if r.elements != 1) or "every interval holds one element")
        return TheoremVerdict(t, key, rows, observed, None, Outcome.SKIPPED, " | ".join(notes),
                              critical=cps, report=report)
    elif t is Theorem.T3_1:
        if p.alpha + 1 >= p.n:
            predicted = Status.FULL
            checks["sufficient"] = full
        elif p.n >= 3:
            checks["at_least_n_minus_2"] = sum(1 for r in rows if len(r.zeros) == 1) >= p.n - 2
        if cps.points:
            checks["root_sign"] = all((v > 0) == (p.alpha + 1 < p.n) for v in cps.points)
    elif t is Theorem.T3_2:
        cond = bool(cps.points) and _t3_2_condition(cps.points, x[0])
        if cond:
            predicted = Status.FULL
            checks["sufficient"] = full
        else:
            notes.append("sufficient condition not met; no claim")
        if cps.closed_form_discrepancy is not None:
            notes.append(f"radical roots agree to {cps.closed_form_discrepancy:.2g}")
    elif t is Theorem.T4_1:
        k = pts[0]
        checks["dichotomy"] = _dichotomy(rows)
        checks["iff"] = full == (k > x[-1])
        predicted = Status.FULL if k > x[-1] else Status.PARTIAL_WITH_GAP
        printed = _census(_intervals(x, "leading"), zi, pts)
        bad = [str(r) for r in printed if r.elements != 1]
        if bad:
            notes.append("printed family (0,x1)..(x_{n-1},x_n) fails at " + "; ".join(bad))
    else:  # T4_2
        gaps = [r for r in rows if not r.zeros]
        checks["at_most_one_gap"] = len(gaps) <= 1 and all(len(r.zeros) <= 1 for r in rows)
        if gaps:
            checks["gap_holds_point"] = any(g.lo < pts[0] < g.hi for g in gaps)
        if p.n >= 4:
            checks["at_least_n_minus_2"] = sum(1 for r in rows if len(r.zeros) == 1) >= p.n - 2
        outside = pts[0] < x[0] or pts[0] > x[-1]
        if outside:
            checks["sufficient"] = full
        predicted = Status.FULL if outside else Status.PARTIAL_WITH_GAP
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        notes.insert(0, "failed: " + ", ".join(failed))
    outcome = Outcome.FAIL if failed else Outcome.PASS
    return TheoremVerdict(t, key, rows, observed, predicted, outcome, " | ".join(notes),
                          checks=checks, critical=cps, report=report)


def t2_2_threshold(n: int, hi: float = 1e4, rel: float = 1e-9) -> float | None:
    """Smallest ``alpha`` with ``a1 < w1`` for degree ``n``, by bisection.

    Returns ``None`` when no ``alpha`` up to ``hi`` qualifies.  Assumes the
    sign of ``w1 - a1`` changes once on ``(-1, hi]``, which the scan checks.
    """

    def gap(a):
        w1 = float(compute_zeros(LagParam(n + 1, a + 2)).zeros[0])
        return w1 - (n + 1 + math.sqrt((n + 1) * (n + a + 2)))

    lo = -1.0 + 1e-12
    if gap(lo) > 0:
        return lo
    if gap(hi) <= 0:
        return None
    while hi - lo > rel * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0:
            hi = mid
        else:
            lo = mid
    return hi
