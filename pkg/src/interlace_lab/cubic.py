"""Real cubic equations, plus the radical formulas for the equal-degree shift-by-four cubic."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CubicRoots:
    real: tuple[float, ...]
    complex_pair: tuple[complex, complex] | None
    discriminant: float

    @property
    def all(self) -> tuple[complex, ...]:
        roots = tuple(complex(r) for r in self.real)
        if self.complex_pair is not None:
            roots += self.complex_pair
        return roots


def _horner(c, x):
    # c = (b, c, d) of the monic x^3 + b x^2 + c x + d
    b, cc, d = c
    f = ((x + b) * x + cc) * x + d
    fp = (3 * x + 2 * b) * x + cc
    return f, fp


def _safe_newton(c, lo, hi, max_iter=200):
    flo, _ = _horner(c, lo)
    fhi, _ = _horner(c, hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if flo > 0:
        lo, hi = hi, lo
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        f, fp = _horner(c, x)
        if f == 0:
            return x
        if f < 0:
            lo = x
        else:
            hi = x
        step_ok = fp != 0
        if step_ok:
            xn = x - f / fp
            step_ok = min(lo, hi) < xn < max(lo, hi)
        if not step_ok:
            xn = 0.5 * (lo + hi)
        if abs(xn - x) <= 2e-16 * max(1.0, abs(x)):
            return xn
        x = xn
    return x


def _polish(c, x, steps=10):
    f, fp = _horner(c, x)
    for _ in range(steps):
        if fp == 0 or f == 0:
            break
        xn = x - f / fp
        fn, fpn = _horner(c, xn)
        if abs(fn) >= abs(f):
            break
        x, f, fp = xn, fn, fpn
    return x


def _quadratic(B, C):
    """Roots of x^2 + B x + C, avoiding cancellation."""
    disc = B * B - 4 * C
    if disc < 0:
        s = math.sqrt(-disc)
        return None, (complex(-B / 2, s / 2), complex(-B / 2, -s / 2))
    s = math.sqrt(disc)
    q = -0.5 * (B + math.copysign(s, B))
    if q == 0:
        return (0.0, 0.0), None
    return tuple(sorted((q, C / q))), None


def _deflate(mono, r):
    """Quadratic ``x^2 + B x + C`` left after dividing out the root ``r``."""
    b, c, d = mono
    B = b + r
    # the product of the remaining roots is -d / r; it avoids cancelling c + r B
    C = -d / r if r != 0 else c + r * B
    return B, C


def solve_cubic(coeffs) -> CubicRoots:
    """Roots of ``c0 + c1 x + c2 x^2 + c3 x^3`` (ascending coefficients, ``c3 != 0``).

    One real root is isolated first: the largest of the trigonometric roots
    when the discriminant is positive, otherwise the single real root by
    bracketed Newton.  Dividing it out leaves a quadratic solved without
    cancellation, and every real root is then Newton-polished on the cubic.
    """
    c0, c1, c2, c3 = (float(v) for v in coeffs)
    if c3 == 0:
        raise ValueError("leading coefficient must be nonzero")
    b, c, d = c2 / c3, c1 / c3, c0 / c3
    mono = (b, c, d)
    disc = 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d
    if disc > 0:
        p = c - b * b / 3
        q = 2 * b**3 / 27 - b * c / 3 + d
        m = 2 * math.sqrt(-p / 3)
        arg = 3 * q / (p * m) if p != 0 else 0.0
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3
        trig = [m * math.cos(theta - 2 * math.pi * k / 3) - b / 3 for k in range(3)]
        r = _polish(mono, max(trig, key=abs))
    else:
        bound = 1.0 + max(abs(b), abs(c), abs(d))
        r = _safe_newton(mono, -bound, bound)
    real2, pair = _quadratic(*_deflate(mono, r))
    if pair is not None and disc > 0:
        # deflation rounding turned a close real pair complex; keep them real
        real2, pair = (pair[0].real, pair[1].real), None
    if pair is not None:
        return CubicRoots((r,), pair, disc)
    roots = sorted([r] + [_polish(mono, v) for v in real2])
    return CubicRoots(tuple(roots), None, disc)


def shift_four_h(n: int, alpha: float) -> tuple[float, float, float]:
    """``(h1, h2, h3)`` entering the radical roots of the shift-by-four cubic."""
    a = float(alpha)
    h3 = (a - 2 * n + 1) * (2 * a + 2 * n + 5)
    inner = (
        10 * a**3 + 66 * a**2 + 129 * a - 8 * n**3
        - 6 * (a + 4) * n**2 + 6 * (a + 1) * (2 * a + 5) * n + 73
    )
    h1 = (a - 2 * n + 1) ** 3 * (2 * a + 2 * n + 5) ** 3 + inner**2
    h2 = (
        -10 * a**3 - 6 * (2 * n + 11) * a**2 + 3 * (2 * (n - 7) * n - 43) * a
        + 8 * n**3 + 24 * n**2 - 30 * n - 73
    )
    return h1, h2, h3


def shift_four_radicals(n: int, alpha: float) -> tuple[complex, complex, complex]:
    """``(l1, l2, l3)`` from the radical formulas, principal branches throughout.

    The three values are the same expression taken at the three cube roots
    of ``h2 + sqrt(h1)``, so as a set they do not depend on the branch; which
    one is labelled ``l1`` does.
    """
    h1, h2, h3 = shift_four_h(n, alpha)
    s = 2 * n - 1 - float(alpha)
    base = h2 + cmath.sqrt(h1)
    if abs(base) == 0:
        base = h2 - cmath.sqrt(h1)
    if abs(base) == 0:
        return (complex(s / 3),) * 3
    cr = base ** (1 / 3)
    w = 1j * math.sqrt(3)
    l1 = (s - h3 / cr + cr) / 3
    l2 = (s + (1 + w) * h3 / (2 * cr) - 2 * cr / (1 + w)) / 3
    l3 = (s + (1 - w) * h3 / (2 * cr) - 2 * cr / (1 - w)) / 3
    return l1, l2, l3
