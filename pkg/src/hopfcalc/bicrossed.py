"""Bicrossed product ``A ⋈ H`` of a matched pair.

The basis is ``a_i ⋈ h_j`` in A-major order (index ``i * dim H + j``).
Multiplication is ``(a ⋈ g)(b ⋈ h) = a (g1 |> b1) ⋈ (g2 <| b2) h``; the
coalgebra is the tensor coalgebra and ``S(a ⋈ h) = (1 ⋈ S(h))(S(a) ⋈ 1)``.
"""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraError, HopfAlgebra, _product_names
from .matched_pair import MatchedPair


def bicrossed_multiplication(mp: MatchedPair) -> np.ndarray:
    """Six-index product tensor ``[a, g, b, h, k, l]``."""
    F, A, H = mp.field, mp.A, mp.H
    return F.contract(
        "gpq,brs,prc,ack,qsd,dhl->agbhkl",
        H.comult, A.comult, mp.left.table, A.mult, mp.right.table, H.mult,
    )


def bicrossed_product(mp: MatchedPair) -> HopfAlgebra:
    if not mp.verified:
        raise AlgebraError("bicrossed product needs a verified matched pair")
    F, A, H = mp.field, mp.A, mp.H
    n = A.dim * H.dim
    M = bicrossed_multiplication(mp)
    comult = F.contract("aij,hkl->ahikjl", A.comult, H.comult)
    antipode = F.contract(
        "i,jh,ka,m,ijkmcl->clah", A.unit, H.antipode, A.antipode, H.unit, M
    )
    return HopfAlgebra(
        field=F,
        basis=tuple(_product_names(A.basis, H.basis)),
        mult=M.reshape(n, n, n),
        unit=F.contract("a,h->ah", A.unit, H.unit).reshape(n),
        comult=comult.reshape(n, n, n),
        counit=F.contract("a,h->ah", A.counit, H.counit).reshape(n),
        antipode=antipode.reshape(n, n),
    ).verify()


def embeddings(mp: MatchedPair) -> tuple[np.ndarray, np.ndarray]:
    """Matrices of ``a -> a ⋈ 1`` and ``h -> 1 ⋈ h``."""
    F, A, H = mp.field, mp.A, mp.H
    left = F.contract("ai,h->ahi", F.eye(A.dim), H.unit).reshape(A.dim * H.dim, A.dim)
    right = F.contract("a,hj->ahj", A.unit, F.eye(H.dim)).reshape(A.dim * H.dim, H.dim)
    return left, right
