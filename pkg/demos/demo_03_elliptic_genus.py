"""
Elliptic genus of a flag manifold
=================================

Expand the symmetric-power generating bundle weight by weight, apply
Borel-Weil-Bott to each line bundle, and compare with the closed product.
"""

from chiralbwb import genus as gn
from chiralbwb.rootdata import build_root_system

rs = build_root_system("A2")
fiber = gn.fiber_character(rs, (1, 1), 2)
print("fiber weights at q^1:", len(fiber.layers[1]), "distinct,", fiber.layer_total(1), "with multiplicity")

res = gn.elliptic_genus(rs, (1, 1), 3)
print("genus:", list(res.qseries))
print("checks:", res.report["checks"])

#%%
# A CSV table of the coefficients, ready for a spreadsheet
print(gn.genus_csv(gn.elliptic_genus(rs, (0, 0), 6, full=False).qseries))
