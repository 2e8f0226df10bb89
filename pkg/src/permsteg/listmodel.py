"""The cover list: a rectangular grid of cell strings plus column utilities.

Cells are ``str``. Files are decoded with ``surrogateescape`` (see
:mod:`permsteg.tableio`), so any byte sequence survives, and lexicographic
order compares the original bytes.
"""
from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Callable, Iterable, Optional, Sequence

from .errors import DuplicateCells, NotFound, RaggedRows

__all__ = [
    "Collation",
    "CoverList",
    "FDReport",
    "column_permutation",
    "detect_collation",
    "detect_fds",
    "index_of",
    "sort_key",
    "sort_rows_by_column",
    "sorted_column",
    "validate_distinct",
]

_NUMBER = re.compile(r"-?(?:\d+(?:\.\d*)?|\.\d+)\Z")


@dataclass(frozen=True)
class CoverList:
    """``n`` rows by ``m`` columns of cells, with an optional header row."""

    rows: tuple[tuple[str, ...], ...]
    header: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        header = tuple(self.header) if self.header is not None else None
        width = len(header) if header is not None else (len(rows[0]) if rows else 0)
        if width < 1:
            raise ValueError("a cover list needs at least one column")
        for i, r in enumerate(rows):
            if len(r) != width:
                raise RaggedRows(i, width, len(r))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "header", header)
        object.__setattr__(self, "_width", width)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[str]], header=None) -> "CoverList":
        return cls(tuple(zip(*columns)), header)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return self._width

    def column(self, j: int) -> tuple[str, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[str, ...]]:
        return [self.column(j) for j in range(self.m)]

    def with_rows(self, rows: Iterable[Sequence[str]]) -> "CoverList":
        return CoverList(tuple(tuple(r) for r in rows), self.header)

    def with_columns(self, columns: Sequence[Sequence[str]]) -> "CoverList":
        return CoverList(tuple(zip(*columns)), self.header)

    def select(self, cols: Sequence[int]) -> "CoverList":
        """Sub-list made of the given columns, in that order."""
        header = tuple(self.header[j] for j in cols) if self.header is not None else None
        return CoverList(tuple(tuple(r[j] for j in cols) for r in self.rows), header)


class Collation(enum.Enum):
    LEX = "lex"
    NUMERIC = "numeric"


def _is_number(cell: str) -> bool:
    return _NUMBER.match(cell) is not None


def _raw(cell: str) -> bytes:
    return cell.encode("utf-8", "surrogateescape")


def sort_key(coll: Collation) -> Callable[[str], object]:
    """Key function realising ``coll``; numeric ties fall back to raw bytes."""
    if coll is Collation.NUMERIC:
        return lambda cell: (Decimal(cell), _raw(cell))
    return _raw


def detect_collation(L: CoverList) -> tuple[Collation, ...]:
    """NUMERIC for columns where every cell is a decimal number, LEX otherwise.

    Depends on cell content only, so it is the same before and after embedding.
    """
    out = []
    for col in L.columns():
        numeric = bool(col) and all(_is_number(c) for c in col)
        out.append(Collation.NUMERIC if numeric else Collation.LEX)
    return tuple(out)


def _collation(L: CoverList, j: int, coll) -> Collation:
    if coll is None:
        return detect_collation(L.select([j]))[0]
    if isinstance(coll, Collation):
        return coll
    return coll[j]


def duplicates(cells: Iterable[str]) -> list[str]:
    return sorted((v for v, c in Counter(cells).items() if c > 1), key=_raw)


def _require_distinct(col: Sequence[str], j: int) -> None:
    dups = duplicates(col)
    if dups:
        raise DuplicateCells(j, dups)


def sorted_column(L: CoverList, j: int, coll=None) -> list[str]:
    """Cells of column ``j`` in strictly ascending order.

    ``coll`` may be a single :class:`Collation`, a per-column sequence, or
    ``None`` to detect it.
    """
    col = L.column(j)
    _require_distinct(col, j)
    return sorted(col, key=sort_key(_collation(L, j, coll)))


def sort_rows_by_column(L: CoverList, j: int, coll=None) -> CoverList:
    _require_distinct(L.column(j), j)
    key = sort_key(_collation(L, j, coll))
    return L.with_rows(sorted(L.rows, key=lambda r: key(r[j])))


def index_of(value: str, ordered: Sequence[str]) -> int:
    for i, v in enumerate(ordered):
        if v == value:
            return i
    raise NotFound(f"{value!r} is not in the column")


def column_permutation(L: CoverList, j: int, coll=None) -> list[int]:
    """Position of each cell of column ``j`` within the sorted column."""
    ordered = sorted_column(L, j, coll)
    pos = {v: i for i, v in enumerate(ordered)}
    return [pos[v] for v in L.column(j)]


def validate_distinct(L: CoverList) -> list[list[str]]:
    """Duplicated values per column; an empty list means the column is usable."""
    return [duplicates(col) for col in L.columns()]


@dataclass(frozen=True)
class FDReport:
    """Single-column functional dependencies ``X -> Y`` that hold in a list."""

    pairs: frozenset = field(default_factory=frozenset)
    duplicates: tuple[int, ...] = ()

    def holds(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs


def detect_fds(L: CoverList) -> FDReport:
    cols = L.columns()
    pairs = set()
    for x, xs in enumerate(cols):
        for y, ys in enumerate(cols):
            if x == y:
                continue
            seen = {}
            if all(seen.setdefault(a, b) == b for a, b in zip(xs, ys)):
                pairs.add((x, y))
    dup_counts = tuple(len(c) - len(set(c)) for c in cols)
    return FDReport(frozenset(pairs), dup_counts)
