import itertools

import pytest
from hypothesis import given, strategies as st

from permsteg.codec import (
    EMPTY_COLUMN,
    assemble,
    bits_from_bytes,
    block_to_rank,
    bytes_from_bits,
    frame,
    rank_to_payload,
    split_even,
    split_greedy,
)
from permsteg.errors import MalformedBlock, NotByteAligned
from permsteg.experiments import MESSAGE_BITS
from permsteg.permutation import factorial, floor_log2_factorial

bit_strings = st.text(alphabet="01", max_size=200)

PRINTED_MESSAGE = "01000010010011110100111001001010010011110101010101110010"


def test_message_bits():
    assert bits_from_bytes(b"BONJOUr") == PRINTED_MESSAGE == MESSAGE_BITS
    assert bits_from_bytes(b"") == ""
    assert bits_from_bytes(b"\xff") == "11111111"
    assert bits_from_bytes(b"\x42") == "01000010"


def test_bytes_from_bits():
    assert bytes_from_bits("01000010") == b"\x42"
    assert bytes_from_bits("") == b""
    with pytest.raises(NotByteAligned):
        bytes_from_bits("0100001")
    with pytest.raises(ValueError):
        bytes_from_bits("0100001x")


@given(st.binary())
def test_bytes_round_trip(data):
    assert bytes_from_bits(bits_from_bytes(data)) == data


def test_split_even():
    assert split_even("0" * 56, 5).lengths == [11, 11, 11, 11, 12]
    assert split_even("0" * 56, 4).lengths == [14, 14, 14, 14]
    assert split_even("", 3).lengths == [0, 0, 0]


def test_split_greedy():
    assert split_greedy("0" * 56, 14).lengths == [14, 14, 14, 14]
    assert split_greedy("0" * 30, 14).lengths == [14, 14, 2]
    assert split_greedy("", 14).k == 0


def test_frame_and_rank():
    assert frame("01000010010") == "101000010010"
    assert frame("01000010010011") == "101000010010011"
    assert frame("") == "1"
    assert block_to_rank("101000010010") == 2578
    assert block_to_rank("101010101110010") == 21874
    assert block_to_rank("1") == 1
    for bad in ["", "0101", "12"]:
        with pytest.raises(MalformedBlock):
            block_to_rank(bad)


def test_worked_example_ranks():
    five = [block_to_rank(frame(b)) for b in split_even(PRINTED_MESSAGE, 5).blocks]
    four = [block_to_rank(frame(b)) for b in split_even(PRINTED_MESSAGE, 4).blocks]
    assert five == [2578, 3027, 3220, 3317, 5490]
    assert four == [20627, 29924, 26941, 21874]
    assert assemble(rank_to_payload(r) for r in five) == PRINTED_MESSAGE


def test_rank_to_payload():
    assert rank_to_payload(20627) == "01000010010011"
    assert rank_to_payload(1) == ""
    assert rank_to_payload(0) is EMPTY_COLUMN
    assert assemble([]) == ""
    assert assemble(["01", EMPTY_COLUMN, "1"]) == "011"


def test_framing_round_trip_exhaustive():
    for length in range(13):
        for bits in itertools.product("01", repeat=length):
            p = "".join(bits)
            r = block_to_rank(frame(p))
            assert 2**length <= r < 2 ** (length + 1)
            assert rank_to_payload(r) == p


@given(bit_strings)
def test_framing_round_trip(p):
    assert rank_to_payload(block_to_rank(frame(p))) == p


@pytest.mark.parametrize("n", [2, 3, 8, 20, 100])
def test_full_block_fits(n):
    c = floor_log2_factorial(n) - 1
    assert block_to_rank(frame("1" * c)) < factorial(n)


@given(bit_strings, st.integers(1, 12))
def test_split_even_partition(s, k):
    plan = split_even(s, k)
    assert "".join(plan.blocks) == s
    assert plan.k == k
    assert max(plan.lengths) <= -(-len(s) // k)
    assert sum(plan.lengths) == len(s)


@given(bit_strings, st.integers(1, 20))
def test_split_greedy_partition(s, c):
    plan = split_greedy(s, c)
    assert "".join(plan.blocks) == s
    assert plan.k == -(-len(s) // c)
    assert all(x == c for x in plan.lengths[:-1])


@given(bit_strings, st.integers(1, 8))
def test_codec_end_to_end(s, k):
    ranks = [block_to_rank(frame(b)) for b in split_even(s, k).blocks]
    assert assemble(rank_to_payload(r) for r in ranks) == s
