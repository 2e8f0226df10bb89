"""Myrvold-Ruskey ranking and unranking of permutations.

A permutation of order ``n`` is a sequence holding each of ``0..n-1`` exactly
once. Ranks are plain Python integers, so orders in the thousands work
without overflow.
"""
from __future__ import annotations

import math
from typing import Sequence

from .errors import InvalidOrder, InvalidPermutation, RankOutOfRange

__all__ = [
    "factorial",
    "floor_log2_factorial",
    "inverse",
    "is_permutation",
    "rank",
    "unrank",
]


def factorial(n: int) -> int:
    """Exact ``n!``."""
    return math.factorial(n)


def floor_log2_factorial(n: int) -> int:
    """``floor(log2(n!))`` from the bit length of the exact factorial.

    Used to size message blocks, where a floating point off-by-one would
    produce ranks that do not fit.
    """
    if n < 1:
        raise InvalidOrder(f"order must be >= 1, got {n}")
    return math.factorial(n).bit_length() - 1


def is_permutation(p: Sequence[int]) -> bool:
    n = len(p)
    seen = [False] * n
    for v in p:
        if not isinstance(v, int) or not 0 <= v < n or seen[v]:
            return False
        seen[v] = True
    return True


def _check(p: Sequence[int]) -> None:
    if len(p) == 0 or not is_permutation(p):
        raise InvalidPermutation(f"not a permutation of 0..{len(p) - 1}: {list(p)[:10]}")


def inverse(p: Sequence[int]) -> list[int]:
    """Return ``q`` with ``q[p[i]] = i``."""
    _check(p)
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return q


def unrank(n: int, r: int) -> list[int]:
    """Permutation of order ``n`` with Myrvold-Ruskey rank ``r``.

    Starts from the identity and, for ``k = n..1``, swaps slot ``k-1`` with
    slot ``r mod k`` before dividing ``r`` by ``k``. This is the recursive
    procedure unrolled into a loop.

    >>> unrank(8, 20627)
    [5, 4, 7, 0, 1, 6, 2, 3]
    >>> unrank(2, 0)
    [1, 0]
    """
    if n < 1:
        raise InvalidOrder(f"order must be >= 1, got {n}")
    if r < 0 or r >= math.factorial(n):
        raise RankOutOfRange(f"rank {r} outside [0, {n}! - 1]")
    p = list(range(n))
    for k in range(n, 0, -1):
        r, d = divmod(r, k)
        p[k - 1], p[d] = p[d], p[k - 1]
    return p


def rank(p: Sequence[int]) -> int:
    """Myrvold-Ruskey rank of ``p``; inverse of :func:`unrank`.

    Works on private copies of ``p`` and its inverse, so the argument is
    left untouched.
    """
    _check(p)
    n = len(p)
    pi = list(p)
    inv = inverse(pi)
    # Digits come out least significant first: r = s_n + n * (s_{n-1} + (n-1) * ...)
    digits = []
    for k in range(n, 1, -1):
        s = pi[k - 1]
        j = inv[k - 1]
        pi[k - 1], pi[j] = pi[j], pi[k - 1]
        inv[s], inv[k - 1] = inv[k - 1], inv[s]
        digits.append(s)
    r = 0
    for k, s in zip(range(2, n + 1), reversed(digits)):
        r = s + k * r
    return r
