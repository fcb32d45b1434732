"""
The Drinfel'd double of H4
==========================

The double is a bicrossed product of the co-opposite dual with H4 itself.
Rewritten in a group-like basis it is the canonical pair with lambda = 1.
"""

import numpy as np

from hopfcalc import (Field, are_isomorphic, canonical_double_actions, canonical_pair, change_basis,
                      check_hopf_axioms, drinfeld_double)
from hopfcalc.presets import HH4_NAMES, group_algebra_c2, sweedler_h4

F = Field(0)
H = sweedler_h4(F)
mp = canonical_double_actions(H)
D = drinfeld_double(H)
print("dim", D.dim, "axioms:", check_hopf_axioms(D).passed)

# %%
# On the dual side X = x* + (gx)*.  The right action of x on X lands in
# the group-likes of H.
X = mp.A.elem(**{"x*": 1, "(gx)*": 1})
print("x <| X =", H.format(mp.right(H.e("x"), X)))

# %%
# Change to the basis 1, G, X, GX of the dual: the result is Sweedler's
# algebra again, in the same coordinates as the canonical pair.
A = mp.A
G = A.elem(**{"1*": 1, "g*": -1})
T = F.array(np.array([A.unit, G, X, A.mul(G, X)]).T)
print("rebased dual is H4:", change_basis(A, T, HH4_NAMES).same_structure(sweedler_h4(F, HH4_NAMES)))

# %%
# Over F3 the morphism solver confirms the isomorphism directly.
F3 = Field(3)
ok, witness = are_isomorphic(canonical_double_actions(sweedler_h4(F3)), canonical_pair(F3, 1), 3)
print("D(H4) isomorphic to the lambda=1 product over F3:", ok)

# %%
# The double of a group algebra is small and commutative.
D2 = drinfeld_double(group_algebra_c2(F))
print("D(kC2): dim", D2.dim, "commutative:", F.equal(D2.mult, D2.mult.transpose(1, 0, 2)))
