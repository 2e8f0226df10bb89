"""Embedding capacity: hidden bits as a percentage of cover bits.

Three formulas are provided because the published numbers do not all come
from the same one:

``prop1``
    ``(m - 1) * (log2(n!) - 1) / (n * l)``
``corollary``
    Stirling form ``(m - 1) * log2(n / e * sqrt(2 pi n)) / l + (1 - m) / (n * l)``,
    evaluated exactly as written.
``used``
    ``k * log2(n!) / (n * l)``, which yields the worked-example and
    tabulated percentages.

``n`` is the number of rows, ``m`` the number of columns, ``k`` the number
of carrier columns and ``l`` the average cell length in bits. All functions
return percentages.
"""
from __future__ import annotations

import math
from typing import Iterable

from .errors import InvalidDimensions

__all__ = [
    "FORMULAS",
    "capacity",
    "capacity_corollary",
    "capacity_curve",
    "capacity_prop1",
    "capacity_used",
    "curve_to_csv",
    "log2_factorial",
]


def log2_factorial(n: int) -> float:
    """``log2(n!)`` as a correctly rounded sum of ``log2(i)``."""
    if n < 1:
        raise InvalidDimensions(f"n must be >= 1, got {n}")
    return math.fsum(math.log2(i) for i in range(2, n + 1))


def _check(n, cols, l, min_cols=1):
    if n < 1 or cols < min_cols or not l > 0:
        raise InvalidDimensions(f"invalid dimensions n={n}, columns={cols}, l={l}")


def capacity_prop1(n: int, m: int, l: float) -> float:
    _check(n, m, l)
    return 100.0 * (m - 1) * (log2_factorial(n) - 1) / (n * l)


def capacity_corollary(n: int, m: int, l: float) -> float:
    _check(n, m, l)
    stirling = math.log2(n * math.exp(-1) * math.sqrt(2 * math.pi * n))
    return 100.0 * ((m - 1) * stirling / l + (-m + 1) / (n * l))


def capacity_used(k: int, n: int, l: float) -> float:
    _check(n, k, l, min_cols=0)
    return 100.0 * k * log2_factorial(n) / (n * l)


FORMULAS = ("prop1", "corollary", "used")


def capacity(formula: str, n: int, cols: int, l: float) -> float:
    """Dispatch by name; ``cols`` is ``m`` for prop1/corollary and ``k`` for used."""
    if formula == "prop1":
        return capacity_prop1(n, cols, l)
    if formula == "corollary":
        return capacity_corollary(n, cols, l)
    if formula == "used":
        return capacity_used(cols, n, l)
    raise ValueError(f"unknown formula {formula!r}; pick one of {FORMULAS}")


def capacity_curve(ns: Iterable[int], cols: int, l: float, formula: str = "used") -> list[tuple[int, float]]:
    rows = [(n, capacity(formula, n, cols, l)) for n in ns]
    if not rows:
        raise InvalidDimensions("empty range of n")
    return rows


def curve_to_csv(rows: Iterable[tuple[int, float]]) -> str:
    lines = ["n,capacity_percent"]
    lines += [f"{n},{pct:.6f}" for n, pct in rows]
    return "\n".join(lines) + "\n"
