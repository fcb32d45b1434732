"""Hopf morphisms between bicrossed products of (HH4, H4) matched pairs.

A morphism ``psi: A ⋈ H -> A' ⋈ H'`` corresponds to four unitary
coalgebra maps ``u: A -> A'``, ``p: A -> H'``, ``r: H -> A'`` and
``v: H -> H'`` subject to eight compatibility conditions.  Over F_p every
unitary coalgebra map of H4 is known, so all quadruples can be found by a
staged, batched search: ``(u, p)`` first, then ``(r, v)``, then the two
mixed conditions on the product of the survivors.

All maps are matrices whose columns are images of basis vectors.
"""

from __future__ import annotations

import functools
import itertools
import sys
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .algebra import HopfAlgebra, _locate, check_bialgebra_map, check_coalgebra_map, outer
from .bicrossed import bicrossed_product
from .field import Field
from .matched_pair import MatchedPair
from .probe import coalgebra_maps
from .report import Report


class MorphismError(RuntimeError):
    pass


# -- unitary coalgebra maps of H4 -------------------------------------------------


@dataclass(frozen=True, eq=False)
class CoalgebraMapFamily:
    """A unitary coalgebra map ``source -> target``.

    Between copies of H4 in the standard basis a nontrivial map fixes 1 and
    g and sends ``x -> alpha - alpha g + beta x`` and
    ``gx -> gamma - gamma g + delta gx``; ``params`` then holds
    ``(alpha, beta, gamma, delta)``.  For other bases ``params`` is None.
    The coalgebra-map property is checked on construction unless the
    caller has already verified it (``verified=True``).
    """

    matrix: np.ndarray
    source: HopfAlgebra
    target: HopfAlgebra
    kind: str = ""
    params: tuple | None = None
    verified: bool = dc_field(default=False, repr=False)

    def __post_init__(self):
        F = self.source.field
        M = F.array(self.matrix)
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)
        trivial = F.equal(M, outer(F, self.target.unit, self.source.counit))
        object.__setattr__(self, "kind", "trivial" if trivial else "parametric")
        if not trivial and _is_standard(self.source) and _is_standard(self.target):
            object.__setattr__(self, "params", tuple(F(M[i, j]) for i, j in ((0, 2), (2, 2), (0, 3), (3, 3))))
        if not self.verified:
            rep = check_coalgebra_map(M, self.source, self.target, unitary=True)
            if not rep.passed:
                raise MorphismError(f"not a unitary coalgebra map: {rep.first_failure()}")
            object.__setattr__(self, "verified", True)

    @classmethod
    def closed_form(cls, field: Field, kind: str, params=()) -> "CoalgebraMapFamily":
        """Build an H4 endomorphism of the coalgebra from its parameters."""
        F = field
        H = _h4(F)
        if kind == "trivial":
            M = outer(F, H.unit, H.counit)
        elif kind == "parametric":
            a, b, c, d = (F(t) for t in params)
            M = F.array([[1, 0, a, c], [0, 1, F(-a), F(-c)], [0, 0, b, 0], [0, 0, 0, d]])
        else:
            raise ValueError(f"unknown kind {kind!r}")
        return cls(M, H, H)

    @property
    def field(self) -> Field:
        return self.source.field

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    @property
    def is_hopf(self) -> bool:
        return check_bialgebra_map(self.matrix, self.source, self.target).passed

    def __eq__(self, other):
        if not isinstance(other, CoalgebraMapFamily):
            return NotImplemented
        return self.field == other.field and self.field.equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.field, tuple(self.matrix.reshape(-1).tolist())))

    def __repr__(self):
        if self.is_trivial:
            return "CoalgebraMapFamily(trivial)"
        if self.params is None:
            return f"CoalgebraMapFamily(matrix={self.matrix.tolist()})"
        return "CoalgebraMapFamily(alpha={}, beta={}, gamma={}, delta={})".format(*self.params)


@functools.lru_cache(maxsize=None)
def _h4(F: Field) -> HopfAlgebra:
    from .presets import sweedler_h4

    return sweedler_h4(F)


def _is_standard(C: HopfAlgebra) -> bool:
    return C.dim == 4 and C.same_structure(_h4(C.field))


def unitary_coalgebra_maps(p) -> list[CoalgebraMapFamily]:
    """The trivial map followed by the ``p^4`` parametric maps of H4, in parameter order."""
    F = p if isinstance(p, Field) else Field(p)
    if F.is_rational:
        raise ValueError("enumeration needs a finite field")
    return list(_all_maps(F))


@functools.lru_cache(maxsize=None)
def _all_maps(F: Field) -> tuple:
    out = [CoalgebraMapFamily.closed_form(F, "trivial")]
    for params in itertools.product(F.elements(), repeat=4):
        out.append(CoalgebraMapFamily.closed_form(F, "parametric", params))
    return tuple(out)


def _structure_key(C: HopfAlgebra) -> tuple:
    return (C.field, C.comult.tobytes(), C.counit.tobytes(), C.unit.tobytes())


_MAP_CACHE: dict = {}


def candidate_maps(C: HopfAlgebra, D: HopfAlgebra) -> list[CoalgebraMapFamily]:
    """All unitary coalgebra maps ``C -> D`` over F_p.

    Between standard H4 copies this is the closed-form list; otherwise the
    generic enumerator from the probe module is used and every candidate
    is re-verified in one batched contraction.
    """
    F = C.field
    if _is_standard(C) and _is_standard(D):
        return [CoalgebraMapFamily(m.matrix, C, D, verified=True) for m in _all_maps(F)]
    key = (_structure_key(C), _structure_key(D))
    if key not in _MAP_CACHE:
        mats = np.array(coalgebra_maps(C, D, unitary=True), dtype=np.int64)
        lhs = F.contract("nji,jab->niab", mats, D.comult)
        rhs = F.contract("icd,nac,nbd->niab", C.comult, mats, mats)
        counit = F.contract("nji,j->ni", mats, D.counit)
        if not (F.equal(lhs, rhs) and F.equal(counit, np.broadcast_to(C.counit, counit.shape))):
            raise MorphismError("enumerated coalgebra map fails verification")
        _MAP_CACHE[key] = mats
    return [CoalgebraMapFamily(m, C, D, verified=True) for m in _MAP_CACHE[key]]


def hopf_maps(C: HopfAlgebra, D: HopfAlgebra, bijective: bool = False) -> list[np.ndarray]:
    """Hopf algebra maps ``C -> D`` over F_p, optionally only the bijective ones.

    Every Hopf map is a unitary coalgebra map, so the search runs over
    :func:`candidate_maps` and keeps the multiplicative ones.
    """
    out = []
    for m in candidate_maps(C, D):
        if not check_bialgebra_map(m.matrix, C, D).passed:
            continue
        if bijective and linalg.rank(C.field, m.matrix) < D.dim:
            continue
        out.append(m.matrix)
    return out


# -- quadruple conditions ---------------------------------------------------------

# Operand names prefixed with ``n`` carry a leading batch axis.  U is never
# batched; P is batched while solving (u, p); V while solving (r, v); R and V
# while joining the two.
_CONDITIONS = {
    "C1": (("axy,ix,njy->naij", "DA", "U", "nP"), ("axy,iy,njx->naij", "DA", "U", "nP")),
    "C3": (("abm,km->abk", "mA", "U"),
           ("axy,ix,nhy,jb,hjl,ilk->nabk", "DA", "U", "nP", "U", "L2", "mA2")),
    "C4": (("abm,nkm->nabk", "mA", "nP"),
           ("nha,bxy,jx,hji,nly,ilk->nabk", "nP", "DA", "U", "R2", "nP", "mH2")),
    "C2": (("hxy,ix,njy->nhij", "DH", "R", "nV"), ("hxy,iy,njx->nhij", "DH", "R", "nV")),
    "C5": (("hgm,km->hgk", "mH", "R"),
           ("hxy,ix,ncy,jg,cjl,ilk->nhgk", "DH", "R", "nV", "R", "L2", "mA2")),
    "C6": (("hgm,nkm->nhgk", "mH", "nV"),
           ("nch,gxy,jx,cji,nly,ilk->nhgk", "nV", "DH", "R", "R2", "nV", "mH2")),
    "C7": (("hxy,nix,ncy,jb,cjl,ilk->nhbk", "DH", "nR", "nV", "U", "L2", "mA2"),
           ("hbxyz,ix,cy,njz,cjl,ilk->nhbk", "T7", "U", "P", "nR", "L2", "mA2")),
    "C8": (("nch,bxy,jx,cji,ly,ilk->nhbk", "nV", "DA", "U", "R2", "P", "mH2"),
           ("hbxyz,cx,njy,cji,nlz,ilk->nhbk", "T8", "P", "nR", "R2", "nV", "mH2")),
}
_STAGE_A = ("C1", "C3", "C4")
_STAGE_B = ("C2", "C5", "C6")
_STAGE_C = ("C7", "C8")


def _structure(src: MatchedPair, dst: MatchedPair) -> dict:
    if src.field != dst.field:
        raise MorphismError("matched pairs over different fields")
    F = src.field
    A, H = src.A, src.H
    D3A, D3H = A.comult3(), H.comult3()
    L, R = src.left.table, src.right.table
    return {
        "DA": A.comult, "DH": H.comult, "mA": A.mult, "mH": H.mult,
        "L2": dst.left.table, "R2": dst.right.table, "mA2": dst.A.mult, "mH2": dst.H.mult,
        "T7": F.contract("hpqr,bstw,psx,qty,rwz->hbxyz", D3H, D3A, L, L, R),
        "T8": F.contract("hpqr,bstw,psx,qty,rwz->hbxyz", D3H, D3A, L, R, R),
    }


def _evaluate(F, spec, ops, sparse=False):
    subscripts, *names = spec
    return F.contract(subscripts, *(ops[n] for n in names), sparse=sparse)


def _batched_mask(F, names, ops, size) -> np.ndarray:
    mask = np.ones(size, dtype=bool)
    for name in names:
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            break
        lhs_spec, rhs_spec = _CONDITIONS[name]
        used = set(lhs_spec[1:]) | set(rhs_spec[1:])
        sub = {k: (ops[k][idx] if k.startswith("n") else ops[k]) for k in used}
        lhs = _evaluate(F, lhs_spec, sub)
        rhs = _evaluate(F, rhs_spec, sub)
        if lhs.ndim < rhs.ndim:
            lhs = lhs[None]
        diff = (np.broadcast_to(lhs, rhs.shape) - rhs) % F.p
        mask[idx] = ~np.any(diff.reshape(idx.size, -1), axis=1)
    return mask


def check_quadruple(src: MatchedPair, dst: MatchedPair, u, p, r, v) -> Report:
    """Evaluate C1 to C8 for explicit maps (any field)."""
    F = src.field
    ops = _structure(src, dst)
    maps = {"U": u, "P": p, "R": r, "V": v}
    for k, M in maps.items():
        M = F.array(M)
        ops[k] = M
        ops["n" + k] = M[None]
    rep = Report("quadruple")
    A, H = src.A, src.H
    labels = {
        "C1": lambda i: A.basis[i[0]], "C2": lambda i: H.basis[i[0]],
        "C3": lambda i: f"{A.basis[i[0]]},{A.basis[i[1]]}",
        "C4": lambda i: f"{A.basis[i[0]]},{A.basis[i[1]]}",
        "C5": lambda i: f"{H.basis[i[0]]},{H.basis[i[1]]}",
        "C6": lambda i: f"{H.basis[i[0]]},{H.basis[i[1]]}",
        "C7": lambda i: f"{H.basis[i[0]]},{A.basis[i[1]]}",
        "C8": lambda i: f"{H.basis[i[0]]},{A.basis[i[1]]}",
    }
    for name in sorted(_CONDITIONS):
        lhs_spec, rhs_spec = _CONDITIONS[name]
        sides = []
        for spec in (lhs_spec, rhs_spec):
            d = _evaluate(F, spec, ops, sparse=True)
            if spec[0].split("->")[1].startswith("n"):
                d = {k[1:]: val for k, val in d.items()}
            sides.append(d)
        rep.record(name, _locate(F, sides[0], sides[1], labels[name]))
    return rep


# -- quadruples ------------------------------------------------------------------


@dataclass(eq=False)
class MorphismQuadruple:
    u: CoalgebraMapFamily
    p: CoalgebraMapFamily
    r: CoalgebraMapFamily
    v: CoalgebraMapFamily
    src: MatchedPair
    dst: MatchedPair
    solved: bool = False
    assembled: np.ndarray | None = None

    @property
    def key(self) -> tuple:
        return tuple(tuple(m.matrix.T.reshape(-1).tolist()) for m in (self.u, self.p, self.r, self.v))

    @property
    def is_bijective(self) -> bool:
        if self.assembled is None:
            self.assembled = assemble_morphism(self)
        return linalg.rank(self.src.field, self.assembled) == self.assembled.shape[0]

    def describe(self) -> str:
        return f"u={self.u!r}, p={self.p!r}, r={self.r!r}, v={self.v!r}"


def solve_quadruples(src: MatchedPair, dst: MatchedPair, p=None, progress=False) -> list[MorphismQuadruple]:
    """Every quadruple ``(u, p, r, v)`` satisfying C1 to C8, ordered by parameters."""
    F = src.field
    if p is not None and Field(p) != F:
        raise MorphismError(f"pairs live over {F}, not F{p}")
    if F.is_rational:
        raise MorphismError("quadruples can only be enumerated over F_p")
    cand = {
        "u": candidate_maps(src.A, dst.A), "p": candidate_maps(src.A, dst.H),
        "r": candidate_maps(src.H, dst.A), "v": candidate_maps(src.H, dst.H),
    }
    stacks = {k: np.array([m.matrix for m in v], dtype=np.int64) for k, v in cand.items()}
    ops = _structure(src, dst)

    def stage(first, second, names):
        found = []
        ops["n" + second.upper()] = stacks[second]
        for i, m in enumerate(cand[first]):
            ops[first.upper()] = m.matrix
            mask = _batched_mask(F, names, ops, len(cand[second]))
            found.extend((i, j) for j in np.flatnonzero(mask))
        return found

    stage_a = stage("u", "p", _STAGE_A)
    stage_b = stage("r", "v", _STAGE_B)
    if progress:
        print(f"stage A: {len(stage_a)} (u,p); stage B: {len(stage_b)} (r,v)", file=sys.stderr)
    out = []
    if stage_a and stage_b:
        ops["nR"] = np.array([stacks["r"][i] for i, _ in stage_b], dtype=np.int64)
        ops["nV"] = np.array([stacks["v"][j] for _, j in stage_b], dtype=np.int64)
        for iu, ip in stage_a:
            ops["U"], ops["P"] = stacks["u"][iu], stacks["p"][ip]
            mask = _batched_mask(F, _STAGE_C, ops, len(stage_b))
            for k in np.flatnonzero(mask):
                ir, iv = stage_b[k]
                q = MorphismQuadruple(cand["u"][iu], cand["p"][ip], cand["r"][ir], cand["v"][iv],
                                      src, dst, solved=True)
                q.assembled = assemble_morphism(q)
                out.append(q)
    out.sort(key=lambda q: q.key)
    return out


def assemble_morphism(q: MorphismQuadruple, check: bool = True) -> np.ndarray:
    """Matrix of ``psi`` on the A-major bicrossed bases; verified as a bialgebra map."""
    src, dst = q.src, q.dst
    F = src.field
    U, P, Rm, V = (F.array(m.matrix) for m in (q.u, q.p, q.r, q.v))
    A, H = src.A, src.H
    a_part = F.contract("ix,cy,jp,cjm,imk->kxyp", U, P, Rm, dst.left.table, dst.A.mult)
    h_part = F.contract("dz,eq,def,gr,fgl->lzqr", P, Rm, dst.right.table, V, dst.H.mult)
    psi = F.contract("axyz,hpqr,kxyp,lzqr->klah", A.comult3(), H.comult3(), a_part, h_part)
    n_out, n_in = dst.A.dim * dst.H.dim, A.dim * H.dim
    psi = psi.reshape(n_out, n_in)
    if check:
        rep = check_bialgebra_map(psi, _product(src), _product(dst))
        if not rep.passed:
            raise MorphismError(f"assembled map is not a bialgebra map: {rep.first_failure()}")
    return psi


_PRODUCTS: dict = {}


def _product(mp: MatchedPair) -> HopfAlgebra:
    # bicrossed products are reused heavily while checking assembled maps
    key = id(mp)
    hit = _PRODUCTS.get(key)
    if hit is None or hit[0] is not mp:
        hit = (mp, bicrossed_product(mp))
        _PRODUCTS[key] = hit
    return hit[1]


def are_isomorphic(E: MatchedPair, F_: MatchedPair, p=None):
    """``(True, quadruple)`` for an isomorphism ``E ⋈ -> F ⋈``, else ``(False, None)``."""
    for q in solve_quadruples(E, F_, p):
        if q.is_bijective:
            return True, q
    return False, None


# -- automorphism groups ------------------------------------------------------------


@dataclass
class GroupReport:
    order: int
    abelian: bool
    relations_verified: bool
    element_orders: dict
    labels: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    @property
    def involutions(self) -> int:
        return self.element_orders.get(2, 0)

    @property
    def structure(self) -> str:
        if self.order == 8 and not self.abelian:
            return "dihedral" if self.involutions == 5 else "quaternion"
        return "abelian" if self.abelian else "nonabelian"

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "abelian": self.abelian,
            "relations_verified": self.relations_verified,
            "element_orders": {str(k): v for k, v in sorted(self.element_orders.items())},
            "structure": self.structure,
        }


def _param(m: CoalgebraMapFamily):
    # beta: coefficient of x in the image of x
    if m.params is None:
        raise MorphismError("automorphism labels need algebras in the standard H4 basis")
    return m.params[1]


def automorphism_label(q: MorphismQuadruple, two_parameter: bool):
    """``("psi", alpha[, beta])`` or ``("phi", alpha[, beta])`` from the quadruple."""
    if q.u.is_trivial and q.v.is_trivial and not q.p.is_trivial and not q.r.is_trivial:
        kind, first, second = "psi", q.p, q.r
    elif q.p.is_trivial and q.r.is_trivial and not q.u.is_trivial and not q.v.is_trivial:
        kind, first, second = "phi", q.u, q.v
    else:
        raise MorphismError(f"automorphism of unexpected shape: {q.describe()}")
    if two_parameter:
        return kind, _param(first), _param(second)
    return kind, _param(first)


def _compose_label(F: Field, x, y, two_parameter: bool):
    """Expected label of ``x o y`` from the semidirect multiplication rules."""
    inv, mul = F.inv, lambda s, t: F(s * t)
    if two_parameter:
        (k1, a, b), (k2, c, d) = x, y
        if k1 == "psi" and k2 == "psi":
            return "phi", mul(b, c), mul(a, d)
        if k1 == "phi" and k2 == "phi":
            return "phi", mul(a, c), mul(b, d)
        if k1 == "psi":
            return "psi", mul(a, c), mul(b, d)
        return "psi", mul(b, c), mul(a, d)
    (k1, a), (k2, b) = x, y
    if k1 == "psi" and k2 == "psi":
        return "phi", mul(inv(a), b)
    if k1 == "phi" and k2 == "phi":
        return "phi", mul(a, b)
    if k1 == "psi":
        return "psi", mul(a, b)
    return "psi", mul(inv(a), b)


def automorphism_group(E: MatchedPair, p=None, two_parameter: bool | None = None) -> GroupReport:
    """Bijective Hopf endomorphisms of ``E ⋈``, with closure and relation checks.

    ``two_parameter`` selects the rule set; by default it is used unless
    the automorphisms satisfy ``alpha beta = 1`` throughout.
    """
    F = E.field
    solutions = [q for q in solve_quadruples(E, E, p) if q.is_bijective]
    mats = [q.assembled for q in solutions]
    index = {m.tobytes(): k for k, m in enumerate(mats)}
    n = len(mats)
    table = np.zeros((n, n), dtype=np.int64)
    for i, j in itertools.product(range(n), repeat=2):
        prod = (mats[i] @ mats[j]) % F.p
        k = index.get(prod.tobytes())
        if k is None:
            raise MorphismError("composition of automorphisms left the enumerated set")
        table[i, j] = k
    identity = index.get(F.eye(mats[0].shape[0]).tobytes()) if n else None
    if identity is None:
        raise MorphismError("identity is not among the automorphisms")
    abelian = bool(np.all(table == table.T))
    orders: dict = {}
    for i in range(n):
        k, cur = 1, i
        while cur != identity:
            cur = table[cur, i]
            k += 1
        orders[k] = orders.get(k, 0) + 1
    labels, notes = [], []
    try:
        if two_parameter is None:
            two_parameter = any(
                F(_param(a) * _param(b)) != 1
                for q in solutions
                for a, b in ([(q.p, q.r)] if q.u.is_trivial else [(q.u, q.v)])
            )
        labels = [automorphism_label(q, two_parameter) for q in solutions]
        ok = len(set(labels)) == n
        for i, j in itertools.product(range(n), repeat=2):
            expected = _compose_label(F, labels[i], labels[j], two_parameter)
            if labels[table[i, j]] != expected:
                ok = False
                notes.append(f"{labels[i]} o {labels[j]} = {labels[table[i, j]]}, rule says {expected}")
                break
    except MorphismError as exc:
        ok = False
        notes.append(str(exc))
    return GroupReport(n, abelian, ok, orders, labels, notes)


def family_automorphism(E: MatchedPair, kind: str, alpha, beta) -> np.ndarray:
    """Assemble ``psi_{alpha,beta}`` (``kind="psi"``) or ``phi_{alpha,beta}`` over any field.

    ``psi`` uses ``p(X) = alpha x``, ``r(x) = beta X`` with u, v trivial;
    ``phi`` uses ``u(X) = alpha X``, ``v(x) = beta x`` with p, r trivial.
    """
    F = E.field
    triv = CoalgebraMapFamily.closed_form(F, "trivial")
    a = CoalgebraMapFamily.closed_form(F, "parametric", (0, alpha, 0, alpha))
    b = CoalgebraMapFamily.closed_form(F, "parametric", (0, beta, 0, beta))
    if kind == "psi":
        q = MorphismQuadruple(triv, a, b, triv, E, E)
    elif kind == "phi":
        q = MorphismQuadruple(a, triv, triv, b, E, E)
    else:
        raise ValueError("kind must be 'psi' or 'phi'")
    rep = check_quadruple(E, E, q.u.matrix, q.p.matrix, q.r.matrix, q.v.matrix)
    if not rep.passed:
        raise MorphismError(f"{kind}({alpha}, {beta}) violates {rep.first_failure()}")
    q.solved = True
    return assemble_morphism(q)


def isomorphism_classes(pairs, p=None) -> list[list[int]]:
    """Partition matched pairs by isomorphism of their bicrossed products.

    Each pair is compared against one representative per class found so
    far; classes come out in order of first appearance.
    """
    classes: list[list[int]] = []
    for i, mp in enumerate(pairs):
        for cls in classes:
            if are_isomorphic(pairs[cls[0]], mp, p)[0]:
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes
