r"""
Arithmetic in GF(4) and GF(8)
=============================

Elements are integers whose binary digits are polynomial coefficients,
lowest degree first.  In GF(4) the value 2 is ``alpha`` and 3 is
``1 + alpha``.
"""

import numpy as np

from psmcodes import gf

F = gf(4)
print(F, "->", F.to_line())

a = np.arange(F.q)
print("addition table\n", F.add(a[:, None], a[None, :]))
print("multiplication table\n", F.mul(a[:, None], a[None, :]))

alpha = F(2)
print("alpha^2 =", alpha * alpha, " alpha^-1 =", alpha.inverse())

# %%
# The set F holds the elements with zero constant coefficient.  Each pair
# {c, c+1} with c in F contains exactly one element of F, and together the
# pairs cover the whole field.  The encoder relies on this.
G8 = gf(8)
for c in G8.f_set():
    print(int(c), int(G8.add(c, 1)))

# phi drops the constant coefficient, so phi(b + 0) = phi(b + 1) = b for b in F
print("phi(1 + x + x^2) =", G8.phi_project(7))
