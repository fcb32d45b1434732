"""
Sweedler's four-dimensional Hopf algebra
========================================

Build H4 over a few fields, check the axioms and look at its
group-likes, skew-primitives, integrals and dual.
"""

from hopfcalc import Field, check_hopf_axioms, dual, group_likes, integrals, skew_primitives
from hopfcalc.algebra import outer
from hopfcalc.presets import sweedler_h4

# %%
# Structure constants are exact: Fractions over Q, residues over F_p.
for F in (Field(0), Field(3), Field(7)):
    H = sweedler_h4(F)
    print(F, "axioms pass:", check_hopf_axioms(H).passed)

H = sweedler_h4(Field(5))
x = H.e("x")
print("Delta(x) =", H.format_tensor(H.delta(x)))
print("S(x) =", H.format(H.S(x)))

# %%
# Over a finite field the group-likes are found by a complete search.
G = group_likes(H)
print("group-likes:", [H.format(g) for g in G])

one, g = G
for a, b, name in [(one, g, "P(1,g)"), (g, one, "P(g,1)"), (one, one, "P(1,1)")]:
    print(name, skew_primitives(H, a, b))

# %%
# H4 is not unimodular: its left and right integrals differ.
left, unimodular = integrals(H, "left")
right, _ = integrals(H, "right")
print("left:", left.format(), "right:", right.format(), "unimodular:", unimodular)

# %%
# The dual has the same shape, generated by 1* - g* and x* + (gx)*.
Hd = dual(H)
Gd = Hd.elem(**{"1*": 1, "g*": -1})
Xd = Hd.elem(**{"x*": 1, "(gx)*": 1})
F = Hd.field
expected = outer(F, Hd.unit, Xd) + outer(F, Xd, Gd)
print("Delta(X) = 1 (x) X + X (x) G:", F.equal(Hd.delta(Xd), expected))
print("G^2 =", Hd.format(Hd.mul(Gd, Gd)))
