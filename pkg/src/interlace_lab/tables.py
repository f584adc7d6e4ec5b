"""Rebuild the published zero tables and figure data from computed zeros.

Cells are produced by rounding full-precision zeros half-even at each
table's display precision.  Boxes come from the interlacing analysis.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal

from interlace_lab.analysis import (
    Status,
    Theorem,
    classify_interlacing,
    critical_points,
    theorem_pair,
    verify_theorem,
)
from interlace_lab.laguerre import InvalidParameterError, LagParam
from interlace_lab.zeros import compute_zeros


def round_sig(value: float, sig: int) -> Decimal:
    """``value`` rounded half-even to ``sig`` significant digits (exact binary input)."""
    d = Decimal(float(value))
    if d == 0:
        return Decimal(0)
    exp = d.adjusted()
    r = d.quantize(Decimal(1).scaleb(exp - sig + 1), rounding=ROUND_HALF_EVEN)
    if r.adjusted() > exp:
        # rounding carried into a new decade, e.g. 9.996 -> 10.0
        r = d.quantize(Decimal(1).scaleb(exp - sig + 2), rounding=ROUND_HALF_EVEN)
    return r


def format_sig(value: float, sig: int, strip: bool = False) -> str:
    s = format(round_sig(value, sig), "f")
    if strip and "." in s:
        s = s.rstrip("0").rstrip(".")
    return s


def format_fixed(value: float, places: int) -> str:
    q = Decimal(1).scaleb(-places)
    return format(Decimal(float(value)).quantize(q, rounding=ROUND_HALF_EVEN), "f")


@dataclass(frozen=True)
class CellFormat:
    """How one table prints numbers: ``sig`` significant digits or ``places`` decimals."""

    sig: int | None = None
    places: int | None = None
    strip: bool = False

    def __call__(self, value: float) -> str:
        if self.places is not None:
            return format_fixed(value, self.places)
        return format_sig(value, self.sig, self.strip)

    def ulp(self, text: str) -> Decimal:
        """Size of one unit in the last displayed place of ``text``."""
        d = Decimal(text)
        return Decimal(1).scaleb(d.as_tuple().exponent)


class TableId(enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"


@dataclass(frozen=True)
class RowSpec:
    param: LagParam
    symbol: str


@dataclass(frozen=True)
class TableSpec:
    table_id: TableId
    title: str
    rows: tuple[RowSpec, ...]
    fmt: CellFormat
    box: str | None
    theorem: Theorem | None = None
    base: tuple[int, float] | None = None


def _pair_table(tid, title, theorem, n, alpha, fmt, outer_sym, inner_sym, box):
    p = LagParam(n, alpha)
    inner, outer = theorem_pair(theorem, p)
    return TableSpec(
        tid, title, (RowSpec(outer, outer_sym), RowSpec(inner, inner_sym)), fmt, box,
        theorem, (n, float(alpha)),
    )


_SIG3 = CellFormat(sig=3)
TABLES = {
    TableId.T1: TableSpec(
        TableId.T1, "Zeros of L_8^(alpha+1), alpha = 0..19",
        tuple(RowSpec(LagParam(8, a + 1), "z") for a in range(20)), _SIG3, "gap", Theorem.T2_1,
    ),
    TableId.T2: TableSpec(
        TableId.T2, "Zeros of L_7^(alpha), alpha = 0..19",
        tuple(RowSpec(LagParam(7, a), "x") for a in range(20)), _SIG3, "bracket", Theorem.T2_1,
    ),
    TableId.T3: _pair_table(TableId.T3, "L_5^(43) against L_6^(45)", Theorem.T2_2, 5, 43,
                            CellFormat(sig=6, strip=True), "w", "x", None),
    TableId.T4: _pair_table(TableId.T4, "L_7^(100) against L_8^(102)", Theorem.T2_2, 7, 100,
                            CellFormat(sig=6, strip=True), "w", "x", None),
    TableId.T5: _pair_table(TableId.T5, "L_7^(-1/2) against L_6^(7/2)", Theorem.T4_2, 7, -0.5,
                            CellFormat(places=4), "x", "X", "gap"),
    TableId.T6: _pair_table(TableId.T6, "L_6^(140) against L_5^(144)", Theorem.T4_2, 6, 140,
                            CellFormat(sig=6, strip=True), "x", "X", "gap"),
    TableId.T7: _pair_table(TableId.T7, "L_8^(50) against L_7^(54)", Theorem.T4_2, 8, 50,
                            CellFormat(sig=5), "x", "X", "gap"),
}


def coerce_table(t) -> TableId:
    if isinstance(t, TableId):
        return t
    try:
        return TableId(str(t).upper())
    except ValueError:
        raise InvalidParameterError(f"unknown table {t!r}") from None


@dataclass(frozen=True)
class Cell:
    column: str
    value: float
    text: str
    boxed: bool = False


@dataclass(frozen=True)
class RenderedRow:
    param: LagParam
    cells: tuple[Cell, ...]

    @property
    def label(self) -> str:
        return str(self.param)


@dataclass
class RenderedTable:
    spec: TableSpec
    rows: list[RenderedRow]
    notes: list[str] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max(len(r.cells) for r in self.rows)

    def records(self):
        for r in self.rows:
            for c in r.cells:
                yield {"polynomial": r.label, "column": c.column, "value": c.text, "boxed": c.boxed}

    def to_text(self) -> str:
        w = self.width
        head = ["polynomial"] + [str(k + 1) for k in range(w)]
        lines = [f"{self.spec.table_id.value}: {self.spec.title}",
                 "| " + " | ".join(head) + " |",
                 "|" + "---|" * len(head)]
        for r in self.rows:
            texts = [f"[{c.text}]" if c.boxed else c.text for c in r.cells]
            texts += ["--"] * (w - len(texts))
            lines.append("| " + " | ".join([r.label] + texts) + " |")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.DictWriter(buf, ["polynomial", "column", "value", "boxed"], lineterminator="\r\n")
        wr.writeheader()
        for rec in self.records():
            wr.writerow({**rec, "boxed": "true" if rec["boxed"] else "false"})
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(list(self.records()), indent=1)

    def render(self, fmt: str = "md") -> str:
        return {"md": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


def bracketing_pair(zeros, point: float):
    """Indices ``(k, k+1)`` of consecutive zeros with ``z_k < point < z_{k+1}``."""
    for k in range(len(zeros) - 1):
        if zeros[k] < point < zeros[k + 1]:
            return k, k + 1
    return None


def _gap_indices(zeros, gap):
    if gap is None:
        return set()
    return {k for k, z in enumerate(zeros) if float(z) in gap}


def _boxes_for_row(spec: TableSpec, row: RowSpec, zeros) -> set[int]:
    if spec.box is None:
        return set()
    if spec.table_id is TableId.T1:
        n = row.param.n - 1
        inner = compute_zeros(LagParam(n, row.param.alpha - 1))
        rep = classify_interlacing(inner, compute_zeros(row.param), (n + 1.0,))
        return _gap_indices(zeros, rep.gap_interval)
    if spec.table_id is TableId.T2:
        pair = bracketing_pair([float(z) for z in zeros], row.param.n + 1.0)
        return set(pair) if pair else set()
    # pair tables: boxes sit on the outer row at the theorem's gap
    if row is not spec.rows[0]:
        return set()
    v = verify_theorem(spec.theorem, *spec.base)
    return _gap_indices(zeros, v.gap())


def _claims(spec: TableSpec) -> list[str]:
    if spec.base is None:
        return []
    v = verify_theorem(spec.theorem, *spec.base)
    cp = v.critical.positive
    x = compute_zeros(spec.rows[0].param).zeros
    notes = [f"{spec.theorem.value} verdict {v.outcome.value}, status {v.observed_status.value}"]
    if spec.theorem is Theorem.T2_2:
        rel = "<" if cp[0] < x[0] else ">="
        notes.append(f"a1 = {cp[0]:.6g} {rel} w1 = {x[0]:.6g}")
    else:
        where = "above x_n" if cp[0] > x[-1] else "below x_1" if cp[0] < x[0] else "inside [x_1, x_n]"
        notes.append(f"q+ = {cp[0]:.6g} lies {where}")
        if v.gap() is not None:
            g = v.gap()
            notes.append(f"gap interval ({g[0]:.6g}, {g[1]:.6g}) holds q+")
    return notes


def build_table(table_id) -> RenderedTable:
    spec = TABLES[coerce_table(table_id)]
    rows = []
    for row in spec.rows:
        zs = compute_zeros(row.param).zeros
        boxes = _boxes_for_row(spec, row, zs)
        cells = tuple(
            Cell(f"{row.symbol}{k + 1}", float(z), spec.fmt(float(z)), k in boxes)
            for k, z in enumerate(zs)
        )
        rows.append(RenderedRow(row.param, cells))
    return RenderedTable(spec, rows, _claims(spec))


def compare_to_printed(table: RenderedTable, printed_rows) -> tuple[list[str], list[str]]:
    """Compare against transcribed rows ``[{"values": [...], "boxed": [...]}]``.

    Returns ``(failures, notes)``.  A cell one display unit away from the
    printed text, with the full-precision value within that unit, is a
    rounding-convention note rather than a failure.
    """
    fails, notes = [], []
    if len(printed_rows) != len(table.rows):
        fails.append(f"row count {len(table.rows)} != printed {len(printed_rows)}")
        return fails, notes
    for r, pr in zip(table.rows, printed_rows):
        if len(pr["values"]) != len(r.cells):
            fails.append(f"{r.label}: {len(r.cells)} cells != printed {len(pr['values'])}")
            continue
        for k, (c, txt) in enumerate(zip(r.cells, pr["values"])):
            if c.text != txt:
                ulp = table.spec.fmt.ulp(txt)
                full = Decimal(c.value)
                if abs(Decimal(c.text) - Decimal(txt)) == ulp and abs(full - Decimal(txt)) < ulp:
                    notes.append(f"{r.label} {c.column}: printed {txt}, computed {c.value:.10g}"
                                 f" rounds to {c.text}")
                else:
                    fails.append(f"{r.label} {c.column}: printed {txt}, got {c.text}")
        got = sorted(k for k, c in enumerate(r.cells) if c.boxed)
        if got != sorted(pr["boxed"]):
            fails.append(f"{r.label}: boxes {got} != printed {sorted(pr['boxed'])}")
    return fails, notes


class FigureId(enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"


# figure -> (theorem, n, alpha)
FIGURES = {
    FigureId.F1: (Theorem.T3_2, 3, 10.0),
    FigureId.F2: (Theorem.T4_1, 3, 10.0),
    FigureId.F3: (Theorem.T4_2, 3, 10.0),
}


@dataclass
class FigureData:
    figure: FigureId
    status: Status
    records: list[dict]

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["series", "role", "index", "re", "im", "status"]
        wr = csv.DictWriter(buf, cols, lineterminator="\r\n")
        wr.writeheader()
        for rec in self.records:
            wr.writerow({**rec, "status": self.status.value})
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"figure": self.figure.value, "status": self.status.value,
                           "points": self.records}, indent=1)

    def to_text(self) -> str:
        lines = [f"{self.figure.value}: status {self.status.value}"]
        for rec in self.records:
            v = f"{rec['re']:.10g}" + (f" {rec['im']:+.10g}i" if rec["im"] else "")
            lines.append(f"{rec['series']:<14} {rec['role']:<8} {rec['index']:>2}  {v}")
        return "\n".join(lines)

    def render(self, fmt: str = "md") -> str:
        return {"md": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


def build_figure(figure_id) -> FigureData:
    try:
        fid = figure_id if isinstance(figure_id, FigureId) else FigureId(str(figure_id).upper())
    except ValueError:
        raise InvalidParameterError(f"unknown figure {figure_id!r}") from None
    theorem, n, alpha = FIGURES[fid]
    p = LagParam(n, alpha)
    inner, outer = theorem_pair(theorem, p)
    recs = []
    for role, q in (("inner", inner), ("outer", outer)):
        for k, z in enumerate(compute_zeros(q).zeros):
            recs.append({"series": str(q), "role": role, "index": k + 1, "re": float(z), "im": 0.0})
    cps = critical_points(theorem, p)
    for k, r in enumerate(cps.roots):
        recs.append({"series": theorem.value, "role": "critical", "index": k + 1,
                     "re": r.real, "im": r.imag})
    status = verify_theorem(theorem, n, alpha).observed_status
    return FigureData(fid, status, recs)
