"""
Permutation ranks
=================

Every arrangement of ``n`` items has a rank in ``[0, n! - 1]``. The ordering
used here comes from a swap schedule rather than from lexicographic order,
so rank 0 is not the identity.
"""

import math

from permsteg import floor_log2_factorial, rank, unrank

# the six arrangements of three items, by rank
for r in range(math.factorial(3)):
    print(r, unrank(3, r))

# identity is the *last* rank
print(rank([0, 1, 2, 3, 4]), math.factorial(5) - 1)

# ranks are Python ints, so large orders are fine
n = 1000
r = math.factorial(n) // 3
assert rank(unrank(n, r)) == r
print(f"{n}! has {floor_log2_factorial(n) + 1} bits")
