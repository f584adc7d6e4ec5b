"""Generalized Laguerre polynomials: evaluation and Jacobi matrix data."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import numpy as np

from interlace_lab import _dd


class InvalidParameterError(ValueError):
    """Raised for a degree/parameter pair outside the orthogonality range."""


@dataclass(frozen=True, order=True)
class LagParam:
    """Identifies one polynomial ``L_n^(alpha)``.

    ``alpha`` must exceed -1 (the weight ``x**alpha * exp(-x)`` is not
    integrable otherwise); ``alpha == -1`` is rejected, not clamped.
    """

    n: int
    alpha: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, numbers.Integral):
            raise InvalidParameterError(f"degree must be an integer, got {self.n!r}")
        if self.n < 0:
            raise InvalidParameterError(f"degree must be nonnegative, got {self.n}")
        alpha = float(self.alpha)
        if not math.isfinite(alpha):
            raise InvalidParameterError(f"alpha must be finite, got {self.alpha!r}")
        if alpha <= -1.0:
            raise InvalidParameterError(f"alpha must exceed -1, got {alpha}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", alpha)

    def shift(self, dn: int = 0, dalpha: float = 0.0) -> "LagParam":
        return LagParam(self.n + dn, self.alpha + dalpha)

    def __str__(self) -> str:
        return f"L_{self.n}^({self.alpha:g})"


def _check_x(x):
    if np.ndim(x) == 0:
        xf = float(x)
        if not math.isfinite(xf):
            raise InvalidParameterError(f"x must be finite, got {x!r}")
        return xf
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidParameterError("x must be finite")
    return arr


def evaluate_all(p: LagParam, x):
    """Return ``[L_0(x), ..., L_n(x)]`` for parameter ``p.alpha``.

    Uses the upward three-term recurrence
    ``(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}``.
    ``x`` may be a scalar or an array; entries have the same shape as ``x``.
    """
    x = _check_x(x)
    a = p.alpha
    values = [x * 0.0 + 1.0]
    if p.n == 0:
        return values
    prev, cur = values[0], 1.0 + a - x
    values.append(cur)
    for k in range(1, p.n):
        prev, cur = cur, ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
        values.append(cur)
    return values


def evaluate(p: LagParam, x):
    """``L_n^(alpha)(x)`` by upward recurrence."""
    x = _check_x(x)
    a = p.alpha
    if p.n == 0:
        return x * 0.0 + 1.0
    prev, cur = 1.0, 1.0 + a - x
    for k in range(1, p.n):
        prev, cur = cur, ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
    return cur


def evaluate_derivative(p: LagParam, x):
    """Derivative of ``L_n^(alpha)``, computed as ``-L_{n-1}^(alpha+1)(x)``."""
    if p.n == 0:
        raise InvalidParameterError("derivative of L_0 is identically zero")
    return -evaluate(LagParam(p.n - 1, p.alpha + 1.0), x)


def evaluate_dd(p: LagParam, x: float) -> tuple[float, float]:
    """Scalar recurrence carried in double-double; returns ``(hi, lo)``.

    Every recurrence coefficient is formed exactly from the double inputs,
    so the only rounding is in the ~106-bit accumulation.
    """
    x = _check_x(x)
    if np.ndim(x) != 0:
        raise InvalidParameterError("double-double evaluation is scalar only")
    a = p.alpha
    prev = (1.0, 0.0)
    if p.n == 0:
        return prev
    cur = _dd.dd_from_sum(1.0, a, -x)
    for k in range(1, p.n):
        c1 = _dd.dd_from_sum(float(2 * k + 1), a, -x)
        c2 = _dd.dd_add((float(k), 0.0), (a, 0.0))
        t = _dd.dd_add(_dd.dd_mul(c1, cur), _dd.dd_neg(_dd.dd_mul(c2, prev)))
        prev, cur = cur, _dd.dd_div_float(t, float(k + 1))
    return cur


@dataclass(frozen=True)
class JacobiMatrixData:
    """Symmetric tridiagonal matrix whose eigenvalues are the zeros of ``L_n``."""

    diag: tuple[float, ...]
    offdiag: tuple[float, ...]

    def dense(self) -> np.ndarray:
        m = np.diag(np.array(self.diag))
        if self.offdiag:
            e = np.array(self.offdiag)
            m += np.diag(e, 1) + np.diag(e, -1)
        return m


def jacobi_matrix(p: LagParam) -> JacobiMatrixData:
    if p.n < 1:
        raise InvalidParameterError("Jacobi matrix needs degree >= 1")
    a = p.alpha
    diag = tuple(2.0 * k + 1.0 + a for k in range(p.n))
    offdiag = tuple(math.sqrt(k * (k + a)) for k in range(1, p.n))
    return JacobiMatrixData(diag, offdiag)
