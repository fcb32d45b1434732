"""Drinfel'd double ``D(H) = (H*)^cop ⋈ H``.

With the dual basis ``e^i`` of H* the canonical actions are

    (h |> f)(a) = f(S^-1(h2) a h1)
    h <| f      = f(S^-1(h3) h1) h2
"""

from __future__ import annotations

from .algebra import HopfAlgebra, dual, twist
from .bicrossed import bicrossed_product
from .matched_pair import Action, MatchedPair


def canonical_double_actions(H: HopfAlgebra) -> MatchedPair:
    F = H.field
    Sinv = H.antipode_inverse()
    A = twist(dual(H), False, True)
    m, D = H.mult, H.comult
    # coefficient of e^k in h |> e^i is e^i(S^-1(h2) e_k h1)
    left = F.contract("hpq,sq,skt,tpi->hik", D, Sinv, m, m)
    # coefficient of e_k in h <| e^i is e^i(S^-1(h3) h1), with h2 = e_k
    right = F.contract("hpkr,sr,spi->hik", H.comult3(), Sinv, m)
    mp = MatchedPair(A, H, Action(H, A, "left", left), Action(H, A, "right", right), label="double")
    return mp.verify()


def drinfeld_double(H: HopfAlgebra) -> HopfAlgebra:
    return bicrossed_product(canonical_double_actions(H))
