"""Double-double arithmetic kernels.

A double-double number is an unevaluated pair ``(hi, lo)`` with
``|lo| <= ulp(hi) / 2``; together they carry roughly 106 bits.  Only the
handful of operations needed by the Laguerre recurrence are provided.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def dd_add(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    s, e = two_sum(x[0], y[0])
    t, f = two_sum(x[1], y[1])
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    return quick_two_sum(s, e)


def dd_neg(x: tuple[float, float]) -> tuple[float, float]:
    return -x[0], -x[1]


def dd_mul(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def dd_div_float(x: tuple[float, float], d: float) -> tuple[float, float]:
    q1 = x[0] / d
    p, e = two_prod(q1, d)
    s, f = two_sum(x[0], -p)
    f -= e
    f += x[1]
    q2 = (s + f) / d
    return quick_two_sum(q1, q2)


def dd_from_sum(*terms: float) -> tuple[float, float]:
    """Exact-as-possible sum of doubles, returned as a double-double."""
    acc = (0.0, 0.0)
    for t in terms:
        acc = dd_add(acc, (t, 0.0))
    return acc
