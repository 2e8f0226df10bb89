"""Bit strings, block splitting and control-bit framing.

Bit strings are ordinary ``str`` objects over ``"0"`` and ``"1"``. A payload
block travels as the integer value of ``"1" + payload``; the leading control
bit keeps leading zeros of the payload alive and guarantees the value is at
least 1, which leaves rank 0 free to mark a column that carries nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import MalformedBlock, NotByteAligned

__all__ = [
    "EMPTY_COLUMN",
    "BlockPlan",
    "assemble",
    "bits_from_bytes",
    "block_to_rank",
    "bytes_from_bits",
    "check_bits",
    "encode_blocks",
    "frame",
    "rank_to_payload",
    "split_even",
    "split_greedy",
]

#: Value returned by :func:`rank_to_payload` for rank 0.
EMPTY_COLUMN = None

_BITS = frozenset("01")


def check_bits(s: str) -> str:
    if not _BITS.issuperset(s):
        raise ValueError("bit string may only contain '0' and '1'")
    return s


def bits_from_bytes(data: bytes) -> str:
    """Most significant bit first: ``b"B"`` -> ``"01000010"``."""
    return "".join(format(b, "08b") for b in data)


def bytes_from_bits(bits: str) -> bytes:
    check_bits(bits)
    if len(bits) % 8:
        raise NotByteAligned(f"{len(bits)} bits is not a whole number of bytes")
    return bytes(int(bits[i:i + 8], 2) for i in range(0, len(bits), 8))


@dataclass(frozen=True)
class BlockPlan:
    """Consecutive slices of a message, one per carrier column."""

    blocks: tuple[str, ...]
    capacity: Optional[int] = None

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def lengths(self) -> list[int]:
        return [len(b) for b in self.blocks]


def split_even(s: str, k: int, capacity: Optional[int] = None) -> BlockPlan:
    """Spread ``s`` over exactly ``k`` blocks whose lengths differ by at most one.

    The longer blocks go last, so 56 bits over 5 blocks gives
    ``[11, 11, 11, 11, 12]``.
    """
    check_bits(s)
    if k < 1:
        raise ValueError("need at least one block")
    base, rem = divmod(len(s), k)
    blocks = []
    pos = 0
    for j in range(k):
        size = base + (1 if j >= k - rem else 0)
        blocks.append(s[pos:pos + size])
        pos += size
    return BlockPlan(tuple(blocks), capacity)


def split_greedy(s: str, c: int) -> BlockPlan:
    """Cut ``s`` into ``ceil(len(s) / c)`` blocks of ``c`` bits, the last one shorter."""
    check_bits(s)
    if c < 1:
        raise ValueError("block capacity must be positive")
    return BlockPlan(tuple(s[i:i + c] for i in range(0, len(s), c)), c)


def frame(payload: str) -> str:
    return "1" + check_bits(payload)


def block_to_rank(framed: str) -> int:
    if not framed or framed[0] != "1" or not _BITS.issuperset(framed):
        raise MalformedBlock(f"framed block must be a bit string starting with 1: {framed!r}")
    return int(framed, 2)


def rank_to_payload(r: int) -> Optional[str]:
    """Strip the control bit from the binary form of ``r``.

    Rank 0 yields :data:`EMPTY_COLUMN`.
    """
    if r < 0:
        raise ValueError("ranks are non-negative")
    if r == 0:
        return EMPTY_COLUMN
    return bin(r)[3:]


def assemble(payloads: Iterable[Optional[str]]) -> str:
    return "".join(p for p in payloads if p is not EMPTY_COLUMN)


def encode_blocks(blocks: Sequence[str]) -> list[int]:
    """Frame every block and return the ranks, in order."""
    return [block_to_rank(frame(b)) for b in blocks]
