"""
Drinfeld-Sokolov reduction of affine sl2
========================================

Truncate a critical-level Verma module, tensor with the ghost sector, and
compute the cohomology of d = sum_n e_n phi*_{-n} + phi*_1 exactly.
"""

from chiralbwb.brst.complex import build_complex, ds_cohomology
from chiralbwb.brst.singular import scan_singular_vectors
from chiralbwb.brst.verma import VermaSL2, sugawara_restricted_verma

M = VermaSL2(0, level=-2, cutoff=4)
cx = build_complex(M)
res = ds_cohomology(cx)
print("d^2 = 0:", cx.d_squared_zero)
print("H^0 by twisted degree:", list(res.qseries(0)))     # partition numbers
print("other degrees vanish:", res.vanishes_outside(0))

#%%
# Quotient by the negative Sugawara modes: one class survives
Q = sugawara_restricted_verma(0, cutoff=3)
print("restricted H^0:", list(ds_cohomology(build_complex(Q)).qseries(0)))

#%%
# Singular vectors of M_{-3 omega}, found as kernels of the raising modes
for hit in scan_singular_vectors(VermaSL2(-3, cutoff=2)):
    print(f"weight {hit.weight} omega - {hit.delta_degree} delta:", hit.to_json()["vectors"],
          "class nonzero:", hit.brst_nonzero)
