"""
Equality constructions
======================

Three families reach the bounds exactly: blow-ups of K4, Hadamard rows
blown up by an all-ones block, and the (0,1) matrices built from K4.
"""

# %%
import numpy as np

from kyfan import ky_fan
from kyfan.bounds import check_mo1, check_mo2, check_tmoh, check_tnik
from kyfan.extremal import construct_blowup_extremal, construct_orthogonal_rows, construct_tnik_equality

# %%
# Blowing up K4 by t multiplies the 4-norm by t: 6, 12, 18, 24.
for t in range(1, 5):
    g = construct_blowup_extremal(4, t)
    print(g.n, ky_fan(g, 4).value, check_tmoh(g, 4).is_equality)

# %%
# Four Hadamard rows of length 2, Kronecker with J_{2,3}.
a = construct_orthogonal_rows(4, 4, c=2.0, r=2, s=3)
print(a.shape, np.round(np.linalg.svd(a, compute_uv=False)[:5], 6))
print(check_mo1(a, 4).is_equality, check_mo2(a, 4).is_equality)

# %%
b = construct_tnik_equality(4, r=2, s=2)
print(check_tnik(b, 4).lhs, check_tnik(b, 4).is_equality)
