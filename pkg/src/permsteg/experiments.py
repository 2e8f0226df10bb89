"""Bundled reference data for the worked example and the capacity table.

The golden CSV files under ``golden/`` are transcriptions of published
tables, printing errors included. :data:`KNOWN_TYPOS` lists the cells whose
printed value cannot come from the cover list; the comparisons below report
them separately instead of counting them as failures.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from . import codec
from .capacity import capacity_curve, capacity_used, curve_to_csv
from .engine import (
    attack_row_sort,
    embed_approach1,
    embed_approach2,
    embed_approach2_chained,
    extract_approach1,
    extract_approach2,
    shuffle_rows,
)
from .errors import UnknownTarget
from .listmodel import CoverList
from .tableio import read_table, write_table

__all__ = [
    "CHAINED_STEPS",
    "KNOWN_TYPOS",
    "MESSAGE",
    "MESSAGE_BITS",
    "Report",
    "TARGETS",
    "cover_list",
    "figure1_curve",
    "golden",
    "golden_capacity",
    "reproduce",
]

MESSAGE = b"BONJOUr"
MESSAGE_BITS = codec.bits_from_bytes(MESSAGE)

CHAINED_STEPS = (
    "chained_01_sort_expected.csv",
    "chained_02_arrange_expected.csv",
    "chained_03_sort_january.csv",
    "chained_04_arrange_january.csv",
    "chained_05_sort_february.csv",
    "chained_06_arrange_february.csv",
    "chained_07_sort_march.csv",
    "chained_08_arrange_march.csv",
)

# (file, row, header) -> (printed, value consistent with the cover list)
KNOWN_TYPOS = {
    ("approach1_stego.csv", 3, "Names"): ("Farid AL", "Farid Al"),
    ("approach1_stego.csv", 3, "February"): ("500000", "50000"),
    ("approach1_stego.csv", 5, "February"): ("250000", "200000"),
    ("approach2_chained_stego.csv", 1, "Names"): ("Farid AL", "Farid Al"),
}

CAPACITY_AVG_BITS = 100
CAPACITY_COLUMNS = 3
CAPACITY_TOLERANCE = 0.01


def golden(name: str, corrected: bool = False) -> CoverList:
    """Load a bundled table; ``corrected`` swaps known typos for cover values."""
    data = resources.files("permsteg").joinpath("golden", name).read_bytes()
    L = read_table(data)
    if not corrected:
        return L
    rows = [list(r) for r in L.rows]
    for (fname, i, col), (_, fixed) in KNOWN_TYPOS.items():
        if fname == name:
            rows[i][L.header.index(col)] = fixed
    return L.with_rows(rows)


def cover_list() -> CoverList:
    return golden("cover_list.csv")


def golden_capacity() -> list[tuple[int, float]]:
    text = resources.files("permsteg").joinpath("golden", "capacity_three_columns.csv").read_text()
    rows = [line.split(",") for line in text.splitlines()[1:] if line]
    return [(int(n), float(v)) for n, v in rows]


@dataclass
class Report:
    target: str
    lines: list[str] = field(default_factory=list)
    mismatches: int = 0
    known: int = 0
    artifacts: dict[str, bytes] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def check(self, label: str, passed: bool, detail: str = "") -> None:
        if not passed:
            self.mismatches += 1
        tail = f" ({detail})" if detail else ""
        self.lines.append(f"{'MATCH   ' if passed else 'MISMATCH'} {label}{tail}")

    def render(self) -> str:
        status = "OK" if self.ok else f"FAILED ({self.mismatches} mismatches)"
        body = "\n".join(self.lines)
        return f"== {self.target}: {status}, {self.known} known typo cells\n{body}\n"


def _compare_grid(report: Report, label: str, got: CoverList, name: str) -> None:
    want = golden(name)
    if (got.n, got.m) != (want.n, want.m):
        report.check(label, False, f"shape {got.n}x{got.m} != {want.n}x{want.m}")
        return
    bad = []
    for i, (grow, wrow) in enumerate(zip(got.rows, want.rows)):
        for j, (g, w) in enumerate(zip(grow, wrow)):
            if g == w:
                continue
            typo = KNOWN_TYPOS.get((name, i, want.header[j]))
            if typo is not None and typo[1] == g:
                report.known += 1
                report.lines.append(
                    f"KNOWN    {label} row {i} {want.header[j]}: printed {w!r}, cover has {g!r}"
                )
            else:
                bad.append(f"row {i} col {j}: {g!r} != {w!r}")
    report.check(label, not bad, "; ".join(bad[:4]))


def _exp1_approach1(report: Report) -> None:
    L = cover_list()
    res = embed_approach1(L, MESSAGE_BITS)
    report.artifacts["approach1_stego.csv"] = write_table(res.stego)
    report.check("block ranks", list(res.ranks) == [2578, 3027, 3220, 3317, 5490], str(list(res.ranks)))
    _compare_grid(report, "stego grid", res.stego, "approach1_stego.csv")
    report.check("extraction", extract_approach1(res.stego) == MESSAGE_BITS)


def _exp1_chained(report: Report) -> None:
    L = cover_list()
    res = embed_approach2_chained(L, MESSAGE_BITS)
    report.artifacts["approach2_chained_stego.csv"] = write_table(res.stego)
    for snap, name in zip(res.trace, CHAINED_STEPS):
        report.artifacts[name] = write_table(snap)
    report.check("block ranks", list(res.ranks) == [20627, 29924, 26941, 21874], str(list(res.ranks)))
    for snap, name in zip(res.trace, CHAINED_STEPS):
        _compare_grid(report, name[:-4], snap, name)
    report.check("trace length", len(res.trace) == len(CHAINED_STEPS), str(len(res.trace)))
    _compare_grid(report, "final grid", res.stego, "approach2_chained_stego.csv")


def _exp1_independent(report: Report) -> None:
    L = cover_list()
    res = embed_approach2(L, MESSAGE_BITS)
    report.artifacts["approach2_independent_stego.csv"] = write_table(res.stego)
    report.check("block ranks", list(res.ranks) == [20627, 29924, 26941, 21874], str(list(res.ranks)))
    # each arrange step of the chained tables shows the carrier column exactly as placed here
    for pos, name in enumerate(CHAINED_STEPS[1::2]):
        ref = golden(name)
        report.check(f"column {ref.header[pos]}", res.stego.column(pos + 1) == ref.column(pos))
    report.check("extraction", extract_approach2(res.stego) == MESSAGE_BITS)
    report.check("after row sort", extract_approach2(attack_row_sort(res.stego)) == MESSAGE_BITS)
    shuffled = all(extract_approach2(shuffle_rows(res.stego, seed)) == MESSAGE_BITS for seed in range(100))
    report.check("after 100 seeded shuffles", shuffled)


def _table11(report: Report) -> None:
    rows = []
    for n, printed in golden_capacity():
        got = capacity_used(CAPACITY_COLUMNS, n, CAPACITY_AVG_BITS)
        rows.append((n, got))
        report.check(f"n={n}", abs(got - printed) <= CAPACITY_TOLERANCE, f"{got:.4f} vs {printed}")
    report.artifacts["capacity_three_columns.csv"] = curve_to_csv(rows).encode()


def figure1_curve() -> list[tuple[int, float]]:
    return capacity_curve(range(10, 1001, 10), CAPACITY_COLUMNS, CAPACITY_AVG_BITS, "used")


def _figure1(report: Report) -> None:
    curve = figure1_curve()
    report.artifacts["capacity_curve.csv"] = curve_to_csv(curve).encode()
    values = [v for _, v in curve]
    report.check("strictly increasing in n", all(a < b for a, b in zip(values, values[1:])))
    points = dict(curve)
    for n, printed in golden_capacity():
        report.check(f"n={n} on curve", abs(points[n] - printed) <= CAPACITY_TOLERANCE)


TARGETS = {
    "exp1-approach1": _exp1_approach1,
    "exp1-approach2-chained": _exp1_chained,
    "exp1-approach2-independent": _exp1_independent,
    "table11": _table11,
    "figure1": _figure1,
}


def reproduce(target: str) -> Report:
    try:
        run = TARGETS[target]
    except KeyError:
        raise UnknownTarget(f"unknown target {target!r}; choose from {', '.join(TARGETS)}") from None
    report = Report(target)
    run(report)
    return report
