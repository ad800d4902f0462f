"""
Exhaustive extremal search
==========================

xi_k(n) is the largest Ky Fan k-norm over graphs of order n and tau_k(n) the
largest sum of the k top eigenvalues. Both are found by scanning every
labeled graph, which is feasible up to n = 7 (2^21 graphs) in seconds.
"""

# %%
from kyfan.extremal import search_tau, search_xi

# %%
r = search_xi(4, 4)
print(r.value, r.argmax, r.scanned)

# %%
# tau never exceeds xi: eigenvalue sums are bounded by singular value sums.
for n in range(2, 6):
    print(n, [(round(search_tau(n, k).value, 4), round(search_xi(n, k).value, 4)) for k in range(1, n + 1)])

# %%
# Every labeled attainer is listed, sorted by graph6 string.
print(search_tau(3, 2).argmax)
