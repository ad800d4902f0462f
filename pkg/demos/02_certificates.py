"""
Checking the inequalities
=========================

Each check returns a certificate holding both sides, whether the bound
holds, whether it is tight, and the structural witnesses behind the verdict.
"""

# %%
import numpy as np

from kyfan import adjacency, complete, complete_bipartite, cycle
from kyfan.bounds import check_cap, check_komo, check_mo2, check_tmoh, check_tnik, check_ttfree
from kyfan.extremal import sylvester

# %%
# The (0,1) bound at k = 4 is tight for K4: 2A - J is a plain Hadamard matrix.
cert = check_tnik(adjacency(complete(4)), 4)
print(cert.lhs, cert.rhs, cert.is_equality)
print(cert.witnesses["structural_equality"])

# %%
# The identity is the cautionary case. J - 2I is a plain Hadamard matrix, yet
# the norm is 4 and not 6. The certificate keeps both readings visible.
cert = check_tnik(np.eye(4), 4)
print(cert.lhs, cert.is_equality, cert.witnesses["statement_form_equality"])

# %%
# Graph bounds. The energy lower bound is tight on complete multipartite graphs.
for g in (complete_bipartite(2, 3), cycle(5)):
    c = check_cap(g)
    print(f"{c.lhs:.4f} >= {c.rhs:.4f}  equality={c.is_equality}")

# %%
# Triangle-free graphs: F2 <= 2 sqrt(m), with equality on complete bipartite graphs.
print(check_ttfree(complete_bipartite(3, 3)).is_equality, check_ttfree(cycle(5)).gap)

# %%
# The k-indexed graph bound and its k = n case.
print(check_tmoh(complete(4), 4).is_equality, check_komo(cycle(5)).gap)

# %%
# Hadamard matrices reach the max-entry bound.
print(check_mo2(sylvester(8), 8).is_equality)
