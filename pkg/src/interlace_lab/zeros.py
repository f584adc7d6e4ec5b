"""Certified zeros of ``L_n^(alpha)``.

Zeros are the eigenvalues of the symmetric tridiagonal Jacobi matrix.  They
are isolated by bisection on Sturm-sequence counts (each final bracket is
certified to hold exactly one eigenvalue) and then polished by a few
safeguarded Newton steps on the polynomial itself.
"""

from __future__ import annotations

import enum
import functools
import os
from dataclasses import dataclass, field

import numpy as np

from interlace_lab.laguerre import (
    InvalidParameterError,
    LagParam,
    evaluate,
    evaluate_derivative,
    evaluate_dd,
    jacobi_matrix,
)

PRECISION_ENV = "INTERLACE_LAB_PRECISION"
PRECISION_MODES = ("auto", "double", "dd")
DEFAULT_COMMON_TOL = 1e-8

_EPS = np.finfo(float).eps
_MAX_NEWTON = 5
_BISECT_REL = 1e-6
_SECTIONS = 16
_MAX_BISECT = 200


class EigenConvergenceError(RuntimeError):
    def __init__(self, index: int, message: str):
        super().__init__(f"eigenvalue {index}: {message}")
        self.index = index


class Method(enum.Enum):
    EIGEN_ONLY = "EigenOnly"
    EIGEN_PLUS_NEWTON = "EigenPlusNewton"


def resolve_precision(mode: str | None = None) -> str:
    """Pick the working precision: explicit argument, then environment, then ``auto``."""
    if mode is None:
        mode = os.environ.get(PRECISION_ENV) or "auto"
    mode = mode.strip().lower()
    if mode not in PRECISION_MODES:
        raise InvalidParameterError(
            f"unknown precision mode {mode!r}; expected one of {PRECISION_MODES}"
        )
    return mode


def _uses_dd(p: LagParam, mode: str) -> bool:
    if mode == "dd":
        return True
    if mode == "double":
        return False
    return p.n > 100 or abs(p.alpha) > 100


@dataclass(frozen=True, eq=False)
class ZeroSet:
    """Sorted zeros of one polynomial together with accuracy metadata.

    ``residual_bound`` is ``max |L_n^(alpha)(z_i)|`` over the returned zeros
    (double evaluation); ``error_estimate`` is the largest relative Newton
    correction ``|L/L'| / z`` that would still be applied.
    """

    param: LagParam
    zeros: np.ndarray
    residual_bound: float
    method: Method
    error_estimate: float = float("nan")
    precision: str = "double"
    newton_steps: int = 0
    brackets: np.ndarray = field(default=None, repr=False)

    @property
    def count(self) -> int:
        return len(self.zeros)

    def __len__(self) -> int:
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros.tolist())

    def __getitem__(self, i):
        return self.zeros[i]


def sturm_count(diag, offdiag_sq, x):
    """Number of eigenvalues strictly below each entry of ``x``.

    A zero pivot produces ``-inf`` at the next step, which IEEE arithmetic
    propagates into the correct count; no pivot guard is needed while every
    off-diagonal entry is nonzero.
    """
    x = np.asarray(x, dtype=float)
    q = diag[0] - x
    tmp = np.empty_like(q)
    neg = np.empty(q.shape, dtype=bool)
    count = (q < 0).astype(np.int64)
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(1, len(diag)):
            np.divide(offdiag_sq[i - 1], q, out=q)
            np.subtract(diag[i], x, out=tmp)
            np.subtract(tmp, q, out=q)
            np.less(q, 0.0, out=neg)
            count += neg
    return count


def eigenvalue_brackets(p: LagParam, rel_tol: float = _BISECT_REL, sections: int = _SECTIONS):
    """Bisection brackets ``(lo, hi)`` each holding exactly one eigenvalue.

    All eigenvalues are refined simultaneously by multisection: every pass
    probes ``sections - 1`` interior points per bracket with one vectorised
    Sturm sweep.  The counts at the final bracket ends are the certificate.
    """
    jac = jacobi_matrix(p)
    d = np.array(jac.diag)
    e = np.array(jac.offdiag)
    e2 = e * e
    n = p.n
    radius = np.zeros(n)
    radius[:-1] += e
    radius[1:] += e
    upper = float(np.max(d + radius)) * (1 + 4 * _EPS) + _EPS
    lower = max(0.0, float(np.min(d - radius)))
    if sturm_count(d, e2, np.array([lower]))[0] != 0:
        lower = min(0.0, float(np.min(d - radius))) - 1.0
    idx = np.arange(n)
    lo = np.full(n, lower)
    hi = np.full(n, upper)
    frac = np.arange(1, sections) / sections
    for _ in range(_MAX_BISECT):
        active = (hi - lo) > rel_tol * np.maximum(np.abs(lo), np.abs(hi))
        if not active.any():
            break
        ia = idx[active]
        la, ha = lo[active], hi[active]
        probes = la[:, None] + (ha - la)[:, None] * frac[None, :]
        c = sturm_count(d, e2, probes.ravel()).reshape(probes.shape)
        below = c <= ia[:, None]
        # probes are increasing per row, so ``below`` is a prefix
        k = below.sum(axis=1)
        padded = np.concatenate([la[:, None], probes, ha[:, None]], axis=1)
        rows = np.arange(len(ia))
        lo[active] = padded[rows, k]
        hi[active] = padded[rows, k + 1]
    else:
        bad = int(np.argmax(hi - lo > rel_tol * np.abs(hi)))
        raise EigenConvergenceError(bad, "bisection did not converge")
    c_lo = sturm_count(d, e2, lo)
    c_hi = sturm_count(d, e2, hi)
    for i in range(n):
        if not (c_lo[i] <= i < c_hi[i]):
            raise EigenConvergenceError(i, "Sturm certificate failed")
    return lo, hi


def _residual(p: LagParam, z: np.ndarray, dd: bool) -> np.ndarray:
    if not dd:
        return np.asarray(evaluate(p, z), dtype=float)
    return np.array([sum(evaluate_dd(p, float(zi))) for zi in z])


def _newton_polish(p: LagParam, z, lo_clamp, hi_clamp, dd: bool):
    f = _residual(p, z, dd)
    steps = 0
    live = np.ones(len(z), dtype=bool)
    for _ in range(_MAX_NEWTON):
        if not live.any():
            break
        fp = np.asarray(evaluate_derivative(p, z), dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(live & (fp != 0), f / fp, 0.0)
        trial = np.clip(z - step, lo_clamp, hi_clamp)
        f_trial = _residual(p, trial, dd)
        accept = live & (np.abs(f_trial) < np.abs(f))
        if not accept.any():
            break
        steps += 1
        z = np.where(accept, trial, z)
        f = np.where(accept, f_trial, f)
        tiny_step = np.abs(step) <= 4 * _EPS * np.abs(z)
        live = accept & ~tiny_step
    return z, steps


@functools.lru_cache(maxsize=4096)
def _compute(n: int, alpha: float, polish: bool, mode: str) -> ZeroSet:
    p = LagParam(n, alpha)
    if n < 1:
        raise InvalidParameterError("zeros need degree >= 1")
    dd = _uses_dd(p, mode)
    if polish:
        lo, hi = eigenvalue_brackets(p)
        z = 0.5 * (lo + hi)
        # Newton may roam between the midpoints separating neighbouring brackets.
        lo_clamp = np.empty(n)
        hi_clamp = np.empty(n)
        lo_clamp[0] = lo[0]
        lo_clamp[1:] = 0.5 * (hi[:-1] + lo[1:])
        hi_clamp[:-1] = lo_clamp[1:]
        hi_clamp[-1] = hi[-1]
        z, steps = _newton_polish(p, z, lo_clamp, hi_clamp, dd)
        method = Method.EIGEN_PLUS_NEWTON
    else:
        lo, hi = eigenvalue_brackets(p, rel_tol=4 * _EPS)
        z = 0.5 * (lo + hi)
        steps = 0
        method = Method.EIGEN_ONLY
    for i in range(n):
        if not z[i] > 0:
            raise EigenConvergenceError(i, f"nonpositive zero {z[i]!r}")
    gaps = np.diff(z)
    for i, g in enumerate(gaps):
        if not g > 1e-9 * z[i + 1]:
            raise EigenConvergenceError(i + 1, "zeros not separated")
    f = np.asarray(evaluate(p, z), dtype=float)
    fp = np.asarray(evaluate_derivative(p, z), dtype=float)
    z.setflags(write=False)
    brackets = np.stack([lo, hi], axis=1)
    brackets.setflags(write=False)
    return ZeroSet(
        param=p,
        zeros=z,
        residual_bound=float(np.max(np.abs(f))),
        method=method,
        error_estimate=float(np.max(np.abs(f / fp) / z)),
        precision="dd" if dd else "double",
        newton_steps=steps,
        brackets=brackets,
    )


def compute_zeros(p: LagParam, *, polish: bool = True, precision: str | None = None) -> ZeroSet:
    """Zeros of ``L_n^(alpha)`` in increasing order.

    Results are memoised per ``(n, alpha, polish, precision)``; the returned
    arrays are read-only.
    """
    if p.n < 1:
        raise InvalidParameterError("zeros need degree >= 1")
    return _compute(p.n, p.alpha, polish, resolve_precision(precision))


def zeros_of(n: int, alpha: float, **kwargs) -> ZeroSet:
    return compute_zeros(LagParam(n, alpha), **kwargs)


def detect_common_zeros(a: ZeroSet, b: ZeroSet, tol_rel: float = DEFAULT_COMMON_TOL):
    """Index pairs ``(i, j)`` with ``|a_i - b_j| <= tol_rel * max(a_i, b_j)``.

    An empty result certifies the no-common-zero hypothesis at ``tol_rel``.
    """
    if not (0.0 < tol_rel <= 1e-3):
        raise InvalidParameterError(f"tol_rel must lie in (0, 1e-3], got {tol_rel}")
    za = np.asarray(a.zeros, dtype=float)
    zb = np.asarray(b.zeros, dtype=float)
    if za.size == 0 or zb.size == 0:
        return []
    diff = np.abs(za[:, None] - zb[None, :])
    scale = np.maximum(za[:, None], zb[None, :])
    hits = np.argwhere(diff <= tol_rel * scale)
    return [(int(i), int(j)) for i, j in hits]


def clear_cache() -> None:
    _compute.cache_clear()


__all__ = [
    "DEFAULT_COMMON_TOL",
    "EigenConvergenceError",
    "Method",
    "PRECISION_ENV",
    "ZeroSet",
    "compute_zeros",
    "detect_common_zeros",
    "eigenvalue_brackets",
    "resolve_precision",
    "sturm_count",
    "zeros_of",
]
