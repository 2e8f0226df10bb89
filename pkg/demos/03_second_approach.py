"""
Keeping a critical column
=========================

Approach 2 leaves the Names column sorted and uses the other four columns
for the payload. Sorting or shuffling rows afterwards does no harm.
"""

from permsteg import embed_approach2, embed_approach2_chained, extract_approach2, shuffle_rows, write_table
from permsteg.experiments import MESSAGE_BITS, cover_list

cover = cover_list()
result = embed_approach2(cover, MESSAGE_BITS, shuffle_seed=2024)
print(write_table(result.stego).decode())

for seed in (1, 2, 3):
    assert extract_approach2(shuffle_rows(result.stego, seed)) == MESSAGE_BITS

# %%
# The chained variant re-sorts the whole payload grid before every column.
# Its trace shows each intermediate grid. It produces a valid-looking
# table but the message cannot be read back without the cover.

chained = embed_approach2_chained(cover, MESSAGE_BITS)
for i, snap in enumerate(chained.trace, 1):
    print(f"step {i}")
    print(write_table(snap).decode())
print(write_table(chained.stego).decode())
