"""
Hiding in every column
======================

Approach 1 uses each column of the table as a carrier. The message
"BONJOUr" (56 bits) is split over the five columns of a small ledger.
"""

from permsteg import embed_approach1, extract_approach1, write_table
from permsteg.experiments import MESSAGE_BITS, cover_list
from permsteg.engine import attack_row_sort

cover = cover_list()
print(write_table(cover).decode())

result = embed_approach1(cover, MESSAGE_BITS)
print("block ranks:", result.ranks)
print(write_table(result.stego).decode())

# the receiver only needs the stego table
assert extract_approach1(result.stego) == MESSAGE_BITS

# the weakness: anyone who sorts the rows wipes the message out
print("after a row sort:", extract_approach1(attack_row_sort(result.stego))[:24], "...")
