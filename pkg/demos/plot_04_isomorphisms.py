"""
Isomorphism classes and automorphism groups
===========================================

A Hopf map between two bicrossed products splits into four unitary
coalgebra maps.  Over F_p all of them can be listed, so the solver finds
every morphism, and with it isomorphism classes and automorphism groups.
"""

from hopfcalc import Field, automorphism_group, canonical_pair, solve_quadruples
from hopfcalc.matched_pair import h4_trivial_pair
from hopfcalc.morphism import family_automorphism, isomorphism_classes

p = 3
F = Field(p)
pairs = {"tensor": h4_trivial_pair(F)}
pairs.update({f"lambda={v}": canonical_pair(F, v) for v in range(p)})

# %%
# Every nonzero lambda gives the same algebra up to isomorphism.
names = list(pairs)
classes = isomorphism_classes(list(pairs.values()), p)
print([[names[i] for i in cls] for cls in classes])

# %%
# The witness between lambda=1 and lambda=2 rescales X.
sols = [q for q in solve_quadruples(pairs["lambda=1"], pairs["lambda=2"]) if q.is_bijective]
print(len(sols), "isomorphisms; first:", sols[0].describe())

# %%
# Automorphism groups, with the composition rules checked on every pair.
for name in ("tensor", "lambda=0", "lambda=1"):
    rep = automorphism_group(pairs[name], p)
    print(name, rep.to_dict())

# %%
# The same families exist over Q; here one member is built explicitly.
M = family_automorphism(canonical_pair(Field(0), 1), "phi", 2, "1/2")
print("phi(2, 1/2) fixes the unit:", list(M[:, 0]) == [1] + [0] * 15)
