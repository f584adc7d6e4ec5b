"""Theorem verification over ``(n, alpha)`` grids."""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation

from interlace_lab.analysis import Outcome, Theorem, TheoremVerdict, coerce_theorem, min_degree, verify_theorem
from interlace_lab.laguerre import InvalidParameterError
from interlace_lab.zeros import DEFAULT_COMMON_TOL


def _dec(text: str) -> Decimal:
    try:
        return Decimal(text.strip())
    except InvalidOperation:
        raise InvalidParameterError(f"not a number: {text!r}") from None


def parse_values(text: str) -> list[float]:
    """Comma list of numbers and inclusive ranges ``a..b`` or ``a..b:step``.

    ``0..19`` steps by 1, ``0..19:0.5`` by one half.  Steps are exact decimals
    so long ranges do not drift.
    """
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            raise InvalidParameterError(f"empty item in {text!r}")
        if ".." in part:
            rng, _, step = part.partition(":")
            lo, _, hi = rng.partition("..")
            a, b = _dec(lo), _dec(hi)
            s = _dec(step) if step else Decimal(1)
            if s <= 0:
                raise InvalidParameterError(f"range step must be positive in {part!r}")
            if b < a:
                raise InvalidParameterError(f"empty range {part!r}")
            v = a
            while v <= b:
                out.append(float(v))
                v += s
        else:
            out.append(float(_dec(part)))
    return out


def parse_degrees(text: str) -> list[int]:
    vals = parse_values(text)
    if any(v != int(v) for v in vals):
        raise InvalidParameterError(f"degrees must be integers: {text!r}")
    return [int(v) for v in vals]


@dataclass(frozen=True)
class SweepSpec:
    theorem: Theorem
    n_values: tuple[int, ...]
    alpha_values: tuple[float, ...]
    output: str = "md"

    def __post_init__(self):
        object.__setattr__(self, "theorem", coerce_theorem(self.theorem))
        if not self.n_values:
            raise InvalidParameterError("n range is empty")
        if not self.alpha_values:
            raise InvalidParameterError("alpha list is empty")
        bad = [a for a in self.alpha_values if not a > -1]
        if bad:
            raise InvalidParameterError(f"alpha must exceed -1, got {bad[0]}")
        m = min_degree(self.theorem)
        if min(self.n_values) < m:
            raise InvalidParameterError(
                f"{self.theorem.value} needs n >= {m}, range starts at {min(self.n_values)}"
            )
        if self.output not in ("md", "csv", "json"):
            raise InvalidParameterError(f"unknown output format {self.output!r}")

    @classmethod
    def parse(cls, theorem, n_text: str, alpha_text: str, output: str = "md") -> "SweepSpec":
        return cls(theorem, tuple(parse_degrees(n_text)), tuple(parse_values(alpha_text)), output)

    def grid(self) -> list[tuple[int, float]]:
        return sorted({(n, a) for n in self.n_values for a in self.alpha_values})


def _verify_point(args):
    theorem, n, alpha, tol, precision = args
    return verify_theorem(theorem, n, alpha, tol=tol, precision=precision)


@dataclass
class SweepResult:
    spec: SweepSpec
    verdicts: list[TheoremVerdict]
    elapsed: float
    counts: Counter = field(default_factory=Counter)

    def __post_init__(self):
        self.counts = Counter(v.outcome for v in self.verdicts)

    @property
    def failures(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.outcome is Outcome.FAIL]

    @property
    def skipped(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.outcome is Outcome.SKIPPED]

    def summary(self) -> str:
        c = self.counts
        return (
            f"{self.spec.theorem.value}: {len(self.verdicts)} points, "
            f"PASS {c[Outcome.PASS]}, FAIL {c[Outcome.FAIL]}, Skipped {c[Outcome.SKIPPED]} "
            f"({self.elapsed:.2f} s)"
        )


def run_sweep(spec: SweepSpec, jobs: int | None = None, tol: float = DEFAULT_COMMON_TOL,
              precision: str | None = None) -> SweepResult:
    """Verify every grid point; results come back sorted by ``(n, alpha)``."""
    jobs = jobs or os.cpu_count() or 1
    tasks = [(spec.theorem, n, a, tol, precision) for n, a in spec.grid()]
    t0 = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_verify_point, tasks, chunksize=chunk))
    else:
        verdicts = [_verify_point(t) for t in tasks]
    return SweepResult(spec, verdicts, time.perf_counter() - t0)
