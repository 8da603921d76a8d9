r"""
Masking four partially stuck cells over GF(4)
=============================================

Walks through the worked example: a [15, 11, 3] code over GF(4) that stores
six free symbols and four symbols from F, masks four cells stuck at level 1
and corrects one error.
"""

import numpy as np

from psmcodes import example1 as ex
from psmcodes import example1_scheme

scheme = example1_scheme()
print(scheme)
print("d =", scheme.code.min_distance(), " d0 =", scheme.d0)

# %%
# Encoding in two steps.  First a shift by (z + 1) * 1 with z in F leaves at
# most u0 stuck entries in {0, 1}.  Then a binary combination of the H0
# rows fixes those entries.
trace = scheme.encode_trace(ex.M, ex.M_PRIME, ex.PHI)
print("w     =", trace.w, " z =", trace.z)
print("z_vec =", trace.z_vec)
print("c     =", trace.codeword)
print("stuck cells", ex.PHI, "hold", trace.codeword[list(ex.PHI)])

# %%
# One symbol error anywhere, including on a stuck cell, is corrected.
y = trace.codeword.copy()
y[9] = scheme.field.add(y[9], 1)
m, m_prime = scheme.decode(y)
print("decoded m =", m, " m' =", m_prime)
assert np.array_equal(m, ex.M) and np.array_equal(m_prime, ex.M_PRIME)

print("messages:", scheme.cardinality, "= 4^8")
