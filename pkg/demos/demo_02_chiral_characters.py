"""
Characters at the critical level
================================

The Euler character of the chiral line bundle, computed two ways, and its
decomposition into shifted copies of the irreducible character.
"""

from chiralbwb import characters as ch
from chiralbwb import charseries as cs
from chiralbwb.rootdata import build_root_system

rs = build_root_system("A1")
nu0 = (1,)
trunc = (4, 12)   # delta-degree up to 4, depth up to 12

# Alternating sum of Wakimoto characters against the factored product
a = ch.euler_chiral(rs, nu0, trunc, "wakimoto_sum")
b = ch.euler_chiral(rs, nu0, trunc, "factored")
print("paths agree:", cs.window_equal(a, b)[0])

# Setting e^alpha -> 1 leaves 2 times the two-coloured partition numbers
print("q-dimension:", list(cs.specialize_q(a)))

#%%
# The irreducible quotient: divide by prod (1 - q^<nu0+rho, alpha^vee>)
irr = ch.ch_irreducible_critical(rs, nu0, trunc)
print("irreducible q-dimension:", list(cs.specialize_q(irr)))

# The first few weights of each delta-layer
for mu, n, c in irr.weight_terms():
    if n <= 2 and abs(mu[0]) <= 5:
        print(f"  e^({int(mu[0])} omega - {n} delta): {c}")

#%%
# Full check, rank two
rs2 = build_root_system("B2")
report = ch.verify_chiral_bwb(rs2, (1, 1), (3, 8))
print("B2 chiral Borel-Weil-Bott on the window:", report["pass"])
