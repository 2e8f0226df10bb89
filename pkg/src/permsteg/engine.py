"""Embedding and extraction.

Approach 1 turns every column into a carrier: each column is re-sorted and
then arranged by ``unrank(n, block_rank)``. Rows lose their pairing, and a
reader who sorts the rows destroys the message.

Approach 2 keeps one *critical* column meaningful. Rows are sorted by it,
and every other column is arranged in that row order. Sorting or shuffling
rows afterwards is harmless because the receiver re-sorts by the critical
column before reading.

:func:`embed_approach2_chained` is the step-by-step variant that re-sorts
the payload rows before each column and records every intermediate grid.
It reproduces published worked tables but cannot be inverted without the
cover, so there is no matching extractor.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import codec
from .errors import ListTooSmall, MessageTooLong
from .listmodel import (
    CoverList,
    column_permutation,
    detect_collation,
    sort_key,
    sort_rows_by_column,
    sorted_column,
)
from .permutation import factorial, floor_log2_factorial, rank, unrank

__all__ = [
    "Split",
    "StegoResult",
    "attack_row_sort",
    "block_capacity",
    "capacity_bits",
    "embed",
    "embed_approach1",
    "embed_approach2",
    "embed_approach2_chained",
    "extract",
    "extract_approach1",
    "extract_approach2",
    "payload_columns",
    "shuffle_rows",
]

_U64 = 1 << 64


class Split(enum.Enum):
    EVEN = "even"
    GREEDY = "greedy"


@dataclass(frozen=True)
class StegoResult:
    stego: CoverList
    ranks: tuple[int, ...]
    trace: tuple[CoverList, ...] = ()


def block_capacity(n: int) -> int:
    """Payload bits one column of ``n`` cells can carry."""
    return floor_log2_factorial(n) - 1


def payload_columns(m: int, approach: int, critical: int = 0) -> list[int]:
    if approach == 1:
        return list(range(m))
    if approach == 2:
        if not 0 <= critical < m:
            raise IndexError(f"critical column {critical} out of range for {m} columns")
        return [j for j in range(m) if j != critical]
    raise ValueError(f"approach must be 1 or 2, got {approach}")


def capacity_bits(L: CoverList, approach: int = 1) -> int:
    if L.n < 2:
        raise ListTooSmall(f"need at least 2 rows, got {L.n}")
    if approach == 2 and L.m < 2:
        raise ListTooSmall("approach 2 needs a critical column plus one payload column")
    k = L.m if approach == 1 else L.m - 1
    return k * block_capacity(L.n)


def _plan_ranks(L: CoverList, bits: str, approach: int, split: Split) -> list[int]:
    """One rank per payload column; columns left without a block get 0."""
    codec.check_bits(bits)
    cap = capacity_bits(L, approach)
    if len(bits) > cap:
        raise MessageTooLong(len(bits), cap)
    k = L.m if approach == 1 else L.m - 1
    c = block_capacity(L.n)
    if Split(split) is Split.EVEN:
        plan = codec.split_even(bits, k, c)
    else:
        plan = codec.split_greedy(bits, c) if bits else codec.BlockPlan((), c)
    ranks = codec.encode_blocks(plan.blocks)
    return ranks + [0] * (k - len(ranks))


def _arrange(ordered: Sequence[str], r: int) -> tuple[str, ...]:
    return tuple(ordered[i] for i in unrank(len(ordered), r))


def _embed_columns(L: CoverList, assignments: dict[int, int], colls, executor=None) -> CoverList:
    """Rearrange each assigned column independently of the others."""

    def work(item):
        j, r = item
        return j, _arrange(sorted_column(L, j, colls), r)

    items = list(assignments.items())
    done = executor.map(work, items) if executor is not None else map(work, items)
    cols = L.columns()
    for j, new in done:
        cols[j] = new
    return L.with_columns(cols)


def embed_approach1(L: CoverList, bits: str, split: Split = Split.EVEN, executor=None) -> StegoResult:
    """Hide ``bits`` using every column of ``L`` as a carrier.

    ``executor``, if given, is anything with a ``map`` method (for example a
    ``concurrent.futures`` pool); columns are independent so the result does
    not depend on the order they are processed in.
    """
    colls = detect_collation(L)
    for j in range(L.m):
        sorted_column(L, j, colls)
    ranks = _plan_ranks(L, bits, 1, split)
    stego = _embed_columns(L, dict(enumerate(ranks)), colls, executor)
    return StegoResult(stego, tuple(ranks))


def _read_columns(L: CoverList, cols: Sequence[int]) -> tuple[str, list[int]]:
    colls = detect_collation(L)
    ranks = [rank(column_permutation(L, j, colls)) for j in cols]
    return codec.assemble(codec.rank_to_payload(r) for r in ranks), ranks


def extract_approach1(L: CoverList) -> str:
    return _read_columns(L, range(L.m))[0]


def _sorted_by_critical(L: CoverList, critical: int, colls) -> CoverList:
    for j in range(L.m):
        sorted_column(L, j, colls)
    return sort_rows_by_column(L, critical, colls)


def embed_approach2(
    L: CoverList,
    bits: str,
    critical: int = 0,
    split: Split = Split.EVEN,
    shuffle_seed: Optional[int] = None,
    executor=None,
) -> StegoResult:
    """Hide ``bits`` in the non-critical columns, rows ordered by ``critical``."""
    colls = detect_collation(L)
    payload = payload_columns(L.m, 2, critical)
    base = _sorted_by_critical(L, critical, colls)
    ranks = _plan_ranks(L, bits, 2, split)
    stego = _embed_columns(base, dict(zip(payload, ranks)), colls, executor)
    if shuffle_seed is not None:
        stego = shuffle_rows(stego, shuffle_seed)
    return StegoResult(stego, tuple(ranks))


def embed_approach2_chained(
    L: CoverList, bits: str, critical: int = 0, split: Split = Split.EVEN
) -> StegoResult:
    """Step-by-step approach 2 that re-sorts payload rows before each column.

    For every payload column in turn the payload grid is sorted by that
    column, and the column is then rearranged by its block rank. ``trace``
    holds the payload grid after each sort and after each rearrangement.
    The final grid pairs these rows with the critical column in sorted order.
    """
    colls = detect_collation(L)
    payload = payload_columns(L.m, 2, critical)
    base = _sorted_by_critical(L, critical, colls)
    ranks = _plan_ranks(L, bits, 2, split)

    grid = base.select(payload)
    grid_colls = tuple(colls[j] for j in payload)
    trace = []
    for pos, r in enumerate(ranks):
        grid = sort_rows_by_column(grid, pos, grid_colls)
        trace.append(grid)
        cols = grid.columns()
        cols[pos] = _arrange(sorted_column(grid, pos, grid_colls), r)
        grid = grid.with_columns(cols)
        trace.append(grid)

    cols = base.columns()
    for pos, j in enumerate(payload):
        cols[j] = grid.column(pos)
    return StegoResult(base.with_columns(cols), tuple(ranks), tuple(trace))


def extract_approach2(L: CoverList, critical: int = 0) -> str:
    """Recover the bits from an approach-2 stego list (any row order)."""
    colls = detect_collation(L)
    payload = payload_columns(L.m, 2, critical)
    base = sort_rows_by_column(L, critical, colls)
    return _read_columns(base, payload)[0]


def embed(L: CoverList, bits: str, approach: int = 2, **kw) -> StegoResult:
    if approach == 1:
        return embed_approach1(L, bits, **kw)
    if approach == 2:
        return embed_approach2(L, bits, **kw)
    raise ValueError(f"approach must be 1 or 2, got {approach}")


def extract(L: CoverList, approach: int = 2, critical: int = 0) -> str:
    if approach == 1:
        return extract_approach1(L)
    if approach == 2:
        return extract_approach2(L, critical)
    raise ValueError(f"approach must be 1 or 2, got {approach}")


def shuffle_rows(L: CoverList, seed: int) -> CoverList:
    """Uniformly random row order, reproducible from a 64-bit ``seed``.

    A rank is drawn from ``[0, n! - 1]`` with :class:`random.Random` (MT19937,
    whose integer seeding and ``randrange`` are stable across platforms) and
    the rows are reordered by the corresponding permutation.
    """
    if not 0 <= seed < _U64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    if L.n < 2:
        return L
    r = random.Random(seed).randrange(factorial(L.n))
    return L.with_rows(L.rows[i] for i in unrank(L.n, r))


def attack_row_sort(L: CoverList) -> CoverList:
    """What a curious reader might do: sort all rows by the first column."""
    key = sort_key(detect_collation(L.select([0]))[0])
    return L.with_rows(sorted(L.rows, key=lambda r: key(r[0])))
