import random

import pytest
from hypothesis import strategies as st

from permsteg import CoverList
from permsteg.experiments import cover_list

_results = []


class _Criterion:
    def __init__(self, number, title):
        self.number = number
        self.title = title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        line = f"[{status}] criterion {self.number}: {self.title}"
        _results.append(line)
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _results:
        terminalreporter.section("acceptance criteria")
        for line in _results:
            terminalreporter.write_line(line)


@pytest.fixture
def sample_cover():
    return cover_list()


def random_cover(rng: random.Random, n: int, m: int, header=True) -> CoverList:
    """Cover list with pairwise distinct cells in every column, mixed numeric and text."""
    cols = []
    for j in range(m):
        if rng.random() < 0.5:
            values = rng.sample(range(-10**6, 10**6), n)
            col = [str(v) for v in values]
        else:
            seen = set()
            while len(seen) < n:
                size = rng.randint(1, 6)
                seen.add("".join(rng.choice("abcXYZ é,\"") for _ in range(size)))
            col = sorted(seen)
            rng.shuffle(col)
        cols.append(col)
    hdr = tuple(f"c{j}" for j in range(m)) if header else None
    return CoverList.from_columns(cols, hdr)


def random_bits(rng: random.Random, max_len: int) -> str:
    length = rng.randint(0, max_len)
    return "".join(rng.choice("01") for _ in range(length))


cell_text = st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=8)


@st.composite
def covers(draw, min_n=2, max_n=9, min_m=1, max_m=5):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(min_m, max_m))
    cols = []
    for _ in range(m):
        if draw(st.booleans()):
            vals = draw(st.lists(st.integers(-10**9, 10**9), min_size=n, max_size=n, unique=True))
            cols.append([str(v) for v in vals])
        else:
            cols.append(draw(st.lists(cell_text, min_size=n, max_size=n, unique=True)))
    return CoverList.from_columns(cols, tuple(f"h{j}" for j in range(m)))
