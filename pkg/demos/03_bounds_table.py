r"""
Sphere-packing bounds with stuck cells
======================================

Length 121 over GF(3).  Each row shows how many information symbols
(log base 3 of the bound) survive u stuck cells and t errors, under both
error models.
"""

from psmcodes import BoundQuery, sphere_packing

n, q = 121, 3
print(" u   t  non-overlap   overlap")
for u in (0, 5, 10, 20):
    for t in (0, 5, 10, 25):
        a = sphere_packing(BoundQuery(n, q, u, t, 1, "non_overlapping"))
        b = sphere_packing(BoundQuery(n, q, u, t, 1, "overlapping"))
        print(f"{u:2d}  {t:2d}  {a.k_info:11.4f}  {b.k_info:8.4f}")

# %%
# Errors that may also land on stuck cells make the spheres larger, so the
# overlapping bound is never above the non-overlapping one.
