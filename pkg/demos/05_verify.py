"""
The exhaustive verification suite
=================================

Every inequality is evaluated on every labeled graph up to a given order.
The tallies record violations, equality cases, and any disagreement between
the numeric equality flag and its structural characterization.
"""

# %%
from kyfan.verify import verify_matrices, verify_suite

# %%
rep = verify_suite(6)
print(rep.scanned, rep.violations)
for key, t in rep.tallies.items():
    print(f"{key:<12} checked={t.checked:<6} equalities={t.equalities:<5} mismatches={len(t.mismatches)}")

# %%
# The graphs tight for the energy bound on 4 vertices.
print(sorted(s for s in rep.equality_set("CAP") if s[0] == "C"))

# %%
# All 2^16 (0,1) matrices of order 4: 24 of them are tight at k = 4.
m = verify_matrices(4, 4, ["TNIK"])
print(m.get("TNIK", 4).equalities, m.violations)
