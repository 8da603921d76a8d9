r"""
Greedy parity-check matrices containing the all-one word
========================================================

Builds a parity-check matrix column by column, appends a zero-sum column,
then checks the result independently and turns it into a masking code for
u < q stuck cells.
"""

import numpy as np

from psmcodes import gv_check, gv_construct, gv_max_d, psmc_from_gv, verify_gv

print("inequality holds for (7,4,3,2):", gv_check(7, 4, 3, 2))
print("inequality holds for (7,4,4,2):", gv_check(7, 4, 4, 2))

c = gv_construct(7, 4, 3, 2)
print(c.H)
print("n' =", c.n_prime, " k' =", c.k_prime, " verified:", verify_gv(c.H, 7, 4, 3).ok)

# %%
# Over GF(3) the zero-sum column can be a combination of earlier columns;
# those columns are rescaled or dropped instead.
c3 = gv_construct(12, 9, 3, 3)
print("scaled columns:", c3.scaled, " dropped:", c3.dropped, " n' =", c3.n_prime)

# %%
# The largest guaranteed distance for length 127 over GF(2)
print([gv_max_d(127, k, 2) for k in range(1, 127, 14)])

res = psmc_from_gv(8, 3, 3, 3, 2)
P = res.scheme
cw = P.encode(np.array([2, 0, 1]), [0, 5])
print(P, cw, P.decode(cw))
