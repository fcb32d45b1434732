"""Group-likes, skew-primitives, integrals and coalgebra maps.

Over F_p the group-like search is complete.  It uses the fact that a
group-like ``c`` whose first nonzero coordinate is ``c_j = t`` satisfies the
linear system ``sum_i c_i comult[i, j, k] = t c_k``; each slice ``(j, t)``
is an affine subspace that is scanned exhaustively.  Over Q only candidate
verification is offered.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import HopfAlgebra, outer

SCAN_LIMIT = 10**8


class ProbeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Subspace:
    """Echelon basis (rows) of a subspace of ``algebra``."""

    algebra: HopfAlgebra
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def __contains__(self, v) -> bool:
        return linalg.in_span(self.algebra.field, self.basis, v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra.field.equal(self.basis, other.basis)

    def vectors(self) -> list[np.ndarray]:
        return [row for row in self.basis]

    def format(self) -> list[str]:
        return [self.algebra.format(v) for v in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis=[{', '.join(self.format())}])"


# -- group-likes ---------------------------------------------------------------


def is_group_like(H: HopfAlgebra, c) -> bool:
    F = H.field
    c = F.array(c)
    return F.equal(H.delta(c), outer(F, c, c)) and F.equal(H.eps(c), F(1))


def group_likes(H: HopfAlgebra, candidates=None) -> list[np.ndarray]:
    """All group-like elements, unit first, then in basis order.

    Over Q pass ``candidates``; they are verified and the group-like ones
    returned.  Over F_p the search is complete.
    """
    F = H.field
    if candidates is not None:
        return [F.array(c) for c in candidates if is_group_like(H, c)]
    if F.is_rational:
        raise ProbeError(
            "group-likes over Q cannot be enumerated; pass candidates= to verify specific elements"
        )
    n, p = H.dim, F.p
    slices = []
    budget = 0
    for j in range(n):
        # B[k, i] = comult[i, j, k]; solve (B - t I) c = 0 with c_l = 0 for l < j
        B = np.ascontiguousarray(H.comult[:, j, :].T)
        for t in range(1, p):
            M = F.reduce(B - t * F.eye(n))
            rows = [M]
            if j:
                rows.append(F.eye(n)[:j])
            K = linalg.kernel(F, np.vstack(rows))
            budget += p ** K.shape[0]
            slices.append((j, t, K))
    if budget > SCAN_LIMIT:
        raise ProbeError(f"group-like scan needs {budget} evaluations (> {SCAN_LIMIT})")
    found = {}
    for j, t, K in slices:
        if K.shape[0] == 0:
            continue
        for v in F.vectors(K):
            if v[j] != t:
                continue
            if is_group_like(H, v):
                found[tuple(int(a) for a in v)] = v
    return _unit_first(H, list(found.values()))


def _unit_first(H, vectors):
    # leading nonzero position, then coordinates: basis group-likes keep basis order
    def key(v):
        coords = tuple(int(a) for a in v)
        lead = next(i for i, a in enumerate(coords) if a)
        return (not H.field.equal(v, H.unit), lead, coords)

    return sorted(vectors, key=key)


def group_likes_exhaustive(H: HopfAlgebra) -> list[np.ndarray]:
    """Brute-force scan over all p^dim vectors (an independent oracle)."""
    F = H.field
    if F.is_rational:
        raise ProbeError("exhaustive scan needs a finite field")
    n, p = H.dim, F.p
    if p**n > SCAN_LIMIT:
        raise ProbeError(f"p^dim = {p**n} exceeds the scan limit; use group_likes()")
    D = H.comult.reshape(n, n * n)
    out = []
    chunk = max(1, 200_000 // (n * n))
    it = itertools.product(range(p), repeat=n)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        V = np.array(block, dtype=np.int64)
        lhs = (V @ D) % p
        rhs = (V[:, :, None] * V[:, None, :]).reshape(len(V), n * n) % p
        eps = (V @ H.counit) % p
        ok = np.all(lhs == rhs, axis=1) & (eps == 1)
        out.extend(V[ok])
    return _unit_first(H, out)


# -- skew-primitives -------------------------------------------------------------


def skew_primitives(H: HopfAlgebra, g, h) -> Subspace:
    """``P_{g,h}(H) = {c : Delta(c) = c (x) g + h (x) c}``.

    With this labelling Sweedler's ``x`` (``Delta(x) = x (x) 1 + g (x) x``)
    is (1, g)-primitive.
    """
    F, n = H.field, H.dim
    g, h = F.array(g), F.array(h)
    if not (is_group_like(H, g) and is_group_like(H, h)):
        raise ProbeError("skew-primitive anchors must be group-like")
    # column i of the system: Delta(e_i) - e_i (x) g - h (x) e_i, flattened
    cols = []
    for i in range(n):
        e = F.basis_vector(n, i)
        cols.append(F.reduce(H.delta(e) - outer(F, e, g) - outer(F, h, e)).reshape(n * n))
    M = np.array(cols, dtype=F.dtype).T
    return Subspace(H, linalg.kernel(F, M))


# -- integrals ---------------------------------------------------------------------


def _integral_space(H: HopfAlgebra, side: str) -> np.ndarray:
    F, n = H.field, H.dim
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    m = H.mult if side == "left" else H.mult.transpose(1, 0, 2)
    # rows (h, k): sum_j t_j m[h, j, k] - eps(h) t_k
    M = F.zeros((n, n, n))
    for h in range(n):
        M[h] = F.reduce(m[h].T - H.counit[h] * F.eye(n))
    return linalg.kernel(F, M.reshape(n * n, n))


def integrals(H: HopfAlgebra, side: str = "left") -> tuple[Subspace, bool]:
    """Integral space on ``side`` and whether H is unimodular."""
    left = _integral_space(H, "left")
    right = _integral_space(H, "right")
    for space in (left, right):
        if space.shape[0] == 0:
            raise ProbeError("no nonzero integral: the structure constants are not a Hopf algebra")
    unimodular = H.field.equal(left, right)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    chosen = left if side == "left" else right
    return Subspace(H, chosen), unimodular


def is_semisimple(H: HopfAlgebra) -> bool:
    space, _ = integrals(H, "left")
    return H.eps(space.basis[0]) != 0


# -- coalgebra maps ----------------------------------------------------------------


def pointed_decomposition(C: HopfAlgebra):
    """Basis of C made of group-likes and skew-primitives.

    Returns ``(glikes, items)`` where ``items`` is a list of
    ``(vector, a, b)``: ``a is None`` marks a group-like, otherwise the
    vector lies in ``P_{glikes[a], glikes[b]}``.  Raises when C is not
    spanned by these (coradical filtration longer than one step).
    """
    F = C.field
    glikes = group_likes(C)
    items = [(g, None, None) for g in glikes]
    span = np.array(glikes, dtype=F.dtype)
    for a, b in itertools.product(range(len(glikes)), repeat=2):
        for v in skew_primitives(C, glikes[a], glikes[b]).vectors():
            if not linalg.in_span(F, span, v):
                items.append((v, a, b))
                span = np.vstack([span, v[None, :]])
    if span.shape[0] != C.dim:
        raise ProbeError("coalgebra is not spanned by group-likes and skew-primitives")
    return glikes, items


def coalgebra_maps(C: HopfAlgebra, D: HopfAlgebra, unitary: bool = True) -> list[np.ndarray]:
    """Every (unitary) coalgebra map ``C -> D`` over F_p, as matrices.

    A group-like basis vector must go to a group-like of D and a vector of
    ``P_{a,b}(C)`` into ``P_{f(a),f(b)}(D)``; these conditions are
    necessary and, on a basis, sufficient.
    """
    F = C.field
    if F.is_rational:
        raise ProbeError("coalgebra maps can only be enumerated over F_p")
    glikes_c, items = pointed_decomposition(C)
    glikes_d = group_likes(D)
    P = {}

    def space(i, j):
        if (i, j) not in P:
            P[i, j] = skew_primitives(D, glikes_d[i], glikes_d[j]).basis
        return P[i, j]

    unit_pos = next((k for k, g in enumerate(glikes_c) if F.equal(g, C.unit)), None)
    d_unit = next(k for k, g in enumerate(glikes_d) if F.equal(g, D.unit))
    B = np.array([v for v, _, _ in items], dtype=F.dtype).T
    Binv = linalg.inverse(F, B)
    n_g = len(glikes_c)
    out = []
    choices = []
    for k in range(n_g):
        if unitary and k == unit_pos:
            choices.append([d_unit])
        else:
            choices.append(range(len(glikes_d)))
    for gimg in itertools.product(*choices):
        spaces = [space(gimg[a], gimg[b]) for _, a, b in items[n_g:]]
        pools = [list(F.vectors(S)) if S.shape[0] else [F.zeros(D.dim)] for S in spaces]
        heads = [glikes_d[i] for i in gimg]
        for tail in itertools.product(*pools):
            images = np.array(heads + list(tail), dtype=F.dtype).T
            out.append(F.reduce(images @ Binv))
    out.sort(key=lambda f: tuple(f.T.reshape(-1).tolist()))
    return out
