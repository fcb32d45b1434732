"""
Bicrossed products
==================

The bicrossed product of a matched pair lives on the tensor product
coalgebra with a twisted multiplication.  For the canonical pairs this
gives sixteen-dimensional Hopf algebras with one mixed relation.
"""

from hopfcalc import Field, bicrossed_product, canonical_pair, check_hopf_axioms, verify_presentation
from hopfcalc.bicrossed import embeddings
from hopfcalc.matched_pair import h4_trivial_pair
from hopfcalc.presets import h16_generator_indices, h16_relations, h4_tensor_h4

F = Field(0)

# %%
# Ten relations hold for every lambda; only the last one mixes x and X.
for lam in (0, 1, "1/2"):
    E = bicrossed_product(canonical_pair(F, lam))
    rep = verify_presentation(E, h16_generator_indices(E), h16_relations(F, lam))
    print(f"lambda={lam}: {len(rep.checks)} relations, all hold: {rep.passed}")

E = bicrossed_product(canonical_pair(F, 3))
x, X = E.e("x"), E.e("X")
print("xX + Xx =", E.format(E.mul(x, X) + E.mul(X, x)))

# %%
# The trivial pair gives the ordinary tensor product.
print("trivial pair gives H4 (x) H4:", bicrossed_product(h4_trivial_pair(F)) == h4_tensor_h4(F))

# %%
# Both factors embed, and every basis vector factors as (a ⋈ 1)(1 ⋈ h).
i_a, i_h = embeddings(canonical_pair(F, 3))
print("GX * gx =", E.format(E.mul(i_a[:, 3], i_h[:, 3])))
print("gx * GX =", E.format(E.mul(i_h[:, 3], i_a[:, 3])))
print("axioms:", check_hopf_axioms(E).passed)
