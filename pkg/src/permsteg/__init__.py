"""List steganography by permutation ranks.

A message is cut into blocks, each block is framed with a leading 1 bit and
read as an integer, and that integer picks (as a Myrvold-Ruskey rank) the
order in which one column's cells are written out.
"""
from .capacity import capacity_corollary, capacity_curve, capacity_prop1, capacity_used, log2_factorial
from .codec import (
    EMPTY_COLUMN,
    BlockPlan,
    assemble,
    bits_from_bytes,
    block_to_rank,
    bytes_from_bits,
    frame,
    rank_to_payload,
    split_even,
    split_greedy,
)
from .engine import (
    Split,
    StegoResult,
    attack_row_sort,
    capacity_bits,
    embed,
    embed_approach1,
    embed_approach2,
    embed_approach2_chained,
    extract,
    extract_approach1,
    extract_approach2,
    shuffle_rows,
)
from .errors import *  # noqa: F401,F403
from .listmodel import (
    Collation,
    CoverList,
    FDReport,
    column_permutation,
    detect_collation,
    detect_fds,
    index_of,
    sort_rows_by_column,
    sorted_column,
    validate_distinct,
)
from .permutation import factorial, floor_log2_factorial, inverse, rank, unrank
from .tableio import load, read_table, save, write_table

__version__ = "0.1.0"
