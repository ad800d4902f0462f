"""
Ky Fan norms of graphs and matrices
===================================

The Ky Fan k-norm is the sum of the k largest singular values. For a graph
we take the adjacency matrix, whose singular values are the absolute values
of its eigenvalues.
"""

# %%
import numpy as np

from kyfan import adjacency, complete, cycle, energy, graph_spectrum, ky_fan, spread
from kyfan.graphs import graph6_decode

# %%
# K4 has spectrum 3, -1, -1, -1, so every singular value is visible at k = 4.
k4 = complete(4)
print(graph_spectrum(k4).mu)
print([ky_fan(k4, k).value for k in range(1, 5)])

# %%
# The n-norm of a graph is its energy. The eigenvalues of C5 are 2 cos(2 pi j / 5),
# so the energy is 2 + 4 cos(pi/5) + 4 cos(2 pi/5), about 6.472.
c5 = cycle(5)
print(energy(c5), 2 + 4 * np.cos(np.pi / 5) + 4 * np.cos(2 * np.pi / 5))

# %%
# Spread is the gap between the extreme eigenvalues.
print(spread(c5), spread(k4))

# %%
# Graphs can be read from graph6 strings as well.
g = graph6_decode("Dhc")
print(g == c5, ky_fan(adjacency(g), 2).value)

# %%
# Any real matrix works, not only adjacency matrices.
a = np.arange(12.0).reshape(3, 4)
print(ky_fan(a, 1).value, ky_fan(a, 3).value, np.linalg.norm(a, "nuc"))
