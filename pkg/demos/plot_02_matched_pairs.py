"""
Matched pairs of two Sweedler algebras
======================================

A matched pair is two module-coalgebra actions that are compatible.
Between two copies of H4 there is a trivial pair and a one-parameter
family; everything else fails one of the compatibility conditions.
"""

from hopfcalc import Field, MatchedPair, canonical_pair, census_h4h4, check_matched_pair
from hopfcalc.matched_pair import left_family, right_family, _pair_algebras

F = Field(5)

# %%
# The canonical pair with parameter 2, printed as action tables.
mp = canonical_pair(F, 2)
print("\n".join(mp.left.format_table()))
print("\n".join(mp.right.format_table()))

# %%
# Two valid actions that do not match.  The report names the failing
# conditions and the basis elements where they fail.
A, H = _pair_algebras(F)
bad = MatchedPair(A, H, left_family(F, 4, 0, 1, 0, 1), right_family(F, 1))
rep = check_matched_pair(bad)
for line in rep.lines():
    if "FAIL" in line:
        print(line)

# %%
# The full census over F3: stage one lists every action on each side,
# then every left action is checked against all right actions at once.
census = census_h4h4(3)
for key, value in census.to_dict().items():
    print(f"{key}: {value}")
