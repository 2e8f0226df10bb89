import itertools
import math
import random
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from permsteg.errors import InvalidOrder, InvalidPermutation, RankOutOfRange
from permsteg.permutation import factorial, floor_log2_factorial, inverse, is_permutation, rank, unrank


def unrank_recursive(n, r, pi):
    # literal recursive form, used as an independent oracle
    if n > 0:
        pi[n - 1], pi[r % n] = pi[r % n], pi[n - 1]
        unrank_recursive(n - 1, r // n, pi)
    return pi


@pytest.mark.parametrize(
    "r, expected",
    [
        (20627, [5, 4, 7, 0, 1, 6, 2, 3]),
        (29924, [5, 6, 3, 1, 7, 0, 2, 4]),
        (26941, [3, 2, 7, 4, 6, 1, 0, 5]),
        (21874, [7, 3, 6, 1, 5, 0, 4, 2]),
        (2578, [3, 5, 6, 1, 7, 4, 0, 2]),
    ],
)
def test_unrank_worked_example(r, expected):
    assert unrank(8, r) == expected
    assert rank(expected) == r


def test_unrank_small():
    assert unrank(1, 0) == [0]
    assert unrank(2, 0) == [1, 0]
    assert unrank(2, 1) == [0, 1]


def test_rank_of_identity_is_last():
    for n in range(1, 9):
        assert rank(list(range(n))) == math.factorial(n) - 1


@pytest.mark.parametrize("n", range(1, 8))
def test_unrank_matches_recursive_oracle_exhaustively(n):
    seen = set()
    for r in range(math.factorial(n)):
        p = unrank(n, r)
        assert p == unrank_recursive(n, r, list(range(n)))
        assert rank(p) == r
        seen.add(tuple(p))
    assert seen == set(itertools.permutations(range(n)))


@pytest.mark.parametrize("n", [20, 50, 100])
def test_round_trip_random_big_ranks(n):
    rng = random.Random(n)
    for _ in range(1000):
        r = rng.randrange(math.factorial(n))
        assert rank(unrank(n, r)) == r


@given(st.permutations(list(range(60))))
def test_dual_round_trip(p):
    assert unrank(len(p), rank(p)) == p


def test_large_order():
    n = 1000
    r = math.factorial(n) - 12345
    assert rank(unrank(n, r)) == r


def test_rank_leaves_argument_alone():
    p = [5, 4, 7, 0, 1, 6, 2, 3]
    before = list(p)
    rank(p)
    assert p == before


def test_inverse():
    assert inverse([1, 0]) == [1, 0]
    assert inverse([0, 1, 2]) == [0, 1, 2]
    p = [5, 4, 7, 0, 1, 6, 2, 3]
    q = inverse(p)
    assert q == [3, 4, 6, 7, 1, 0, 5, 2]
    assert all(q[p[i]] == i for i in range(8))


@given(st.permutations(list(range(12))))
def test_inverse_is_involution(p):
    q = inverse(p)
    assert inverse(q) == p
    assert [q[v] for v in p] == list(range(12))


@pytest.mark.parametrize("bad", [[], [0, 0], [1, 2], [0, 2, 1, 3, 3], [0.0, 1]])
def test_invalid_permutations(bad):
    assert not is_permutation(bad) or bad == []
    with pytest.raises(InvalidPermutation):
        rank(bad)
    with pytest.raises(InvalidPermutation):
        inverse(bad)


def test_unrank_errors():
    with pytest.raises(RankOutOfRange):
        unrank(8, 40320)
    with pytest.raises(RankOutOfRange):
        unrank(3, -1)
    with pytest.raises(InvalidOrder):
        unrank(0, 0)


def test_factorial():
    assert factorial(8) == 40320
    assert factorial(0) == 1
    assert factorial(21) == reduce(lambda a, b: a * b, range(1, 22)) == 51090942171709440000
    assert factorial(1000) > 2**64


def _floor_log2_oracle(x):
    k = 0
    while 2 ** (k + 1) <= x:
        k += 1
    return k


def test_floor_log2_factorial():
    assert floor_log2_factorial(8) == 15
    assert floor_log2_factorial(1) == 0
    assert floor_log2_factorial(100) == 524
    with pytest.raises(InvalidOrder):
        floor_log2_factorial(0)


@pytest.mark.parametrize("n", list(range(1, 60)) + [100, 257, 1000])
def test_floor_log2_factorial_brackets(n):
    k = floor_log2_factorial(n)
    assert 2**k <= math.factorial(n) < 2 ** (k + 1)
    if n < 200:
        assert k == _floor_log2_oracle(math.factorial(n))
