"""
Root systems and the dot action
===============================

Build a few root systems, enumerate their Weyl groups, and look at the
shifts that organise the cohomology of a line bundle.
"""

from chiralbwb.rootdata import build_root_system
from chiralbwb.weyl import enumerate_weyl_group, strata, weyl_action
from chiralbwb.characters import cohomology_shifts, format_q_polynomial, verify_denominator_identity

# Positive roots and dual Coxeter numbers for the small types
for name in ["A1", "A2", "B2", "G2"]:
    rs = build_root_system(name)
    W = enumerate_weyl_group(rs)
    print(name, "positive roots:", len(rs.positive_roots), " h^vee:", rs.dual_coxeter,
          " |W|:", len(W), " strata:", [len(s) for s in strata(W)])

# The dot action moves weights around the affine chamber through -rho
rs = build_root_system("A2")
for w in enumerate_weyl_group(rs):
    print(f"{str(w):>9}  w.rho = {tuple(int(c) for c in weyl_action(rs, w, (1, 1)))}")

#%%
# Shifts <nu0 - w.nu0, rho^vee> grouped by length, and the product they sum to
print(cohomology_shifts(rs, (1, 1)))
ok, lhs, rhs = verify_denominator_identity(rs, (1, 1))
print(format_q_polynomial(lhs), "==", format_q_polynomial(rhs), ok)
