"""Module-coalgebra actions, matched pairs and the (HH4, H4) census.

Action tensors are always indexed ``[h, a, k]`` with ``h`` in H and ``a``
in A.  For the left action ``h |> a`` the output index ``k`` runs over A;
for the right action ``h <| a`` it runs over H.
"""

from __future__ import annotations

import dataclasses
import itertools
import sys
from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import HopfAlgebra, _locate, outer
from .field import Field
from .presets import HH4_NAMES, sweedler_h4
from .probe import coalgebra_maps, is_group_like, skew_primitives
from .report import Report


class MatchedPairError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Action:
    H: HopfAlgebra
    A: HopfAlgebra
    side: str  # "left": H (x) A -> A,  "right": H (x) A -> H
    table: np.ndarray

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise MatchedPairError(f"side must be 'left' or 'right', not {self.side!r}")
        if self.H.field != self.A.field:
            raise MatchedPairError("actions need both algebras over the same field")
        out = self.A.dim if self.side == "left" else self.H.dim
        arr = self.H.field.array(self.table)
        if arr.shape != (self.H.dim, self.A.dim, out):
            raise MatchedPairError(
                f"action table has shape {arr.shape}, expected {(self.H.dim, self.A.dim, out)}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "table", arr)

    @property
    def field(self) -> Field:
        return self.H.field

    @property
    def acting(self) -> HopfAlgebra:
        return self.H if self.side == "left" else self.A

    @property
    def module(self) -> HopfAlgebra:
        return self.A if self.side == "left" else self.H

    def __eq__(self, other):
        if not isinstance(other, Action):
            return NotImplemented
        return self.side == other.side and self.field.equal(self.table, other.table)

    def __hash__(self):
        return hash((self.side, self.table.tobytes() if self.table.dtype != object else str(self.table)))

    def __call__(self, h, a) -> np.ndarray:
        return self.field.contract("i,j,ijk->k", h, a, self.table)

    def format_table(self) -> list[str]:
        mod = self.module
        rows = []
        for i, hn in enumerate(self.H.basis):
            cells = [mod.format(self.table[i, j]) for j in range(self.A.dim)]
            rows.append(f"{hn}: " + " | ".join(cells))
        return rows


def trivial_left(H: HopfAlgebra, A: HopfAlgebra) -> Action:
    """``h |> a = eps(h) a``."""
    F = H.field
    return Action(H, A, "left", F.contract("h,ak->hak", H.counit, F.eye(A.dim)))


def trivial_right(H: HopfAlgebra, A: HopfAlgebra) -> Action:
    """``h <| a = eps(a) h``."""
    F = H.field
    return Action(H, A, "right", F.contract("a,hk->hak", A.counit, F.eye(H.dim)))


def check_module_coalgebra(act: Action) -> Report:
    """Unit action, module associativity, coalgebra-map property, counit."""
    F, H, A, T = act.field, act.H, act.A, act.table
    rep = Report(f"{act.side} module coalgebra")
    pair = lambda idx: f"{H.basis[idx[0]]},{A.basis[idx[1]]}"
    if act.side == "left":
        C = A
        unit = F.contract("h,hak->ak", H.unit, T, sparse=True)
        rep.record("unit action", _locate(F, unit, F.eye(A.dim), lambda i: A.basis[i[0]]))
        lhs = F.contract("hgm,mak->hgak", H.mult, T, sparse=True)
        rhs = F.contract("gaj,hjk->hgak", T, T, sparse=True)
        rep.record("associativity", _locate(
            F, lhs, rhs, lambda i: f"{H.basis[i[0]]},{H.basis[i[1]]},{A.basis[i[2]]}"))
    else:
        C = H
        unit = F.contract("a,hak->hk", A.unit, T, sparse=True)
        rep.record("unit action", _locate(F, unit, F.eye(H.dim), lambda i: H.basis[i[0]]))
        lhs = F.contract("abm,hmk->habk", A.mult, T, sparse=True)
        rhs = F.contract("haj,jbk->habk", T, T, sparse=True)
        rep.record("associativity", _locate(
            F, lhs, rhs, lambda i: f"{H.basis[i[0]]},{A.basis[i[1]]},{A.basis[i[2]]}"))
    lhs = F.contract("ham,mij->haij", T, C.comult, sparse=True)
    rhs = F.contract("hpq,ars,pri,qsj->haij", H.comult, A.comult, T, T, sparse=True)
    rep.record("coalgebra map", _locate(F, lhs, rhs, pair))
    lhs = F.contract("hak,k->ha", T, C.counit, sparse=True)
    rep.record("counit", _locate(F, lhs, outer(F, H.counit, A.counit), pair))
    return rep


# -- matched pairs -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MatchedPair:
    A: HopfAlgebra
    H: HopfAlgebra
    left: Action
    right: Action
    verified: bool = False
    label: str = ""

    def __post_init__(self):
        if self.left.side != "left" or self.right.side != "right":
            raise MatchedPairError("expected a left action and a right action")
        for act in (self.left, self.right):
            if not (act.H.same_structure(self.H) and act.A.same_structure(self.A)):
                raise MatchedPairError("action algebras do not match the pair")

    @property
    def field(self) -> Field:
        return self.H.field

    def __eq__(self, other):
        if not isinstance(other, MatchedPair):
            return NotImplemented
        return (self.A.same_structure(other.A) and self.H.same_structure(other.H)
                and self.left == other.left and self.right == other.right)

    def verify(self) -> "MatchedPair":
        rep = check_matched_pair(self)
        if not rep.passed:
            name, where = rep.first_failure()
            raise MatchedPairError(f"{name} fails at {where}")
        return dataclasses.replace(self, verified=True)


def make_pair(A, H, left_table, right_table, label="") -> MatchedPair:
    return MatchedPair(A, H, Action(H, A, "left", left_table), Action(H, A, "right", right_table),
                       label=label)


def trivial_pair(A: HopfAlgebra, H: HopfAlgebra) -> MatchedPair:
    return MatchedPair(A, H, trivial_left(H, A), trivial_right(H, A), label="trivial").verify()


# Every compatibility is written with a batch index ``n`` on the right
# action so the census can test many right actions against one left action
# in a single contraction.  Operands: (DH, DA, mA, mH, L, R).
_MP2_LHS = ("abm,gmk->gabk", "mA", "L")
_MP2_RHS = ("gpq,ars,pri,nqsj,jbl,ilk->ngabk", "DH", "DA", "L", "R", "L", "mA")
_MP3_LHS = ("ghm,nmak->nghak", "mH", "R")
_MP3_RHS = ("hpq,ars,pri,nqsl,ngij,jlk->nghak", "DH", "DA", "L", "R", "R", "mH")
_MP4_LHS = ("gpq,ars,qsj,npri->ngaij", "DH", "DA", "L", "R")
_MP4_RHS = ("gpq,ars,prj,nqsi->ngaij", "DH", "DA", "L", "R")


def _operands(A, H, L, R):
    return {"DH": H.comult, "DA": A.comult, "mA": A.mult, "mH": H.mult, "L": L, "R": R}


def _run(F, spec, ops, sparse=False):
    subscripts, *names = spec
    return F.contract(subscripts, *(ops[n] for n in names), sparse=sparse)


def _drop_batch(d):
    return {k[1:]: v for k, v in d.items()}


def check_matched_pair(mp: MatchedPair) -> Report:
    """Module-coalgebra checks on both actions plus mp1 to mp4 on all basis pairs."""
    F, A, H = mp.field, mp.A, mp.H
    rep = Report("matched pair")
    for act in (mp.left, mp.right):
        sub = check_module_coalgebra(act)
        for name, fails in sub.checks.items():
            rep.record(f"{act.side} {name}", fails)
    L, R = mp.left.table, mp.right.table
    ops = _operands(A, H, L, R[None])

    lhs = F.contract("a,hak->hk", A.unit, L, sparse=True)
    fails = _locate(F, lhs, outer(F, H.counit, A.unit), lambda i: f"{H.basis[i[0]]},1")
    lhs = F.contract("h,hak->ak", H.unit, R, sparse=True)
    fails += _locate(F, lhs, outer(F, A.counit, H.unit), lambda i: f"1,{A.basis[i[0]]}")
    rep.record("mp1", fails)

    def triple(first, second, third):
        return lambda i: f"{first[i[0]]},{second[i[1]]},{third[i[2]]}"

    lhs = _run(F, _MP2_LHS, ops, sparse=True)
    rhs = _drop_batch(_run(F, _MP2_RHS, ops, sparse=True))
    rep.record("mp2", _locate(F, lhs, rhs, triple(H.basis, A.basis, A.basis)))
    lhs = _drop_batch(_run(F, _MP3_LHS, ops, sparse=True))
    rhs = _drop_batch(_run(F, _MP3_RHS, ops, sparse=True))
    rep.record("mp3", _locate(F, lhs, rhs, triple(H.basis, H.basis, A.basis)))
    lhs = _drop_batch(_run(F, _MP4_LHS, ops, sparse=True))
    rhs = _drop_batch(_run(F, _MP4_RHS, ops, sparse=True))
    rep.record("mp4", _locate(F, lhs, rhs, lambda i: f"{H.basis[i[0]]},{A.basis[i[1]]}"))
    return rep


def matched_pair_mask(A: HopfAlgebra, H: HopfAlgebra, L: np.ndarray, Rs: np.ndarray) -> np.ndarray:
    """Boolean mask over a stack of right tables ``Rs[n]``: which satisfy mp1 to mp4 with ``L``.

    Dense F_p arithmetic only; the module-coalgebra property of each action
    is assumed.
    """
    F = A.field
    if F.is_rational:
        raise MatchedPairError("batched checks run over F_p only")
    n = Rs.shape[0]

    def agree(lhs, rhs):
        diff = (np.broadcast_to(lhs, rhs.shape) - rhs) % F.p
        return ~np.any(diff.reshape(n, -1), axis=1)

    mask = np.ones(n, dtype=bool)
    left_ok = F.equal(F.contract("a,hak->hk", A.unit, L), outer(F, H.counit, A.unit))
    if not left_ok:
        return ~mask
    mask &= agree(outer(F, A.counit, H.unit)[None], F.contract("h,nhak->nak", H.unit, Rs))
    for lhs_spec, rhs_spec in ((_MP4_LHS, _MP4_RHS), (_MP2_LHS, _MP2_RHS), (_MP3_LHS, _MP3_RHS)):
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            break
        sub = Rs[idx]
        ops = _operands(A, H, L, sub)
        lhs = _run(F, lhs_spec, ops)
        rhs = _run(F, rhs_spec, ops)
        if lhs.ndim < rhs.ndim:
            lhs = lhs[None]
        diff = (np.broadcast_to(lhs, rhs.shape) - rhs) % F.p
        mask[idx] = ~np.any(diff.reshape(idx.size, -1), axis=1)
    return mask


# -- explicit tables -----------------------------------------------------------------


def action_from_rows(H: HopfAlgebra, A: HopfAlgebra, side: str, rows) -> Action:
    """Build an action from ``rows[h][a]``, each cell a dict ``{basis name: coeff}``."""
    F = H.field
    target = A if side == "left" else H
    T = F.zeros((H.dim, A.dim, target.dim))
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            for name, c in cell.items():
                T[i, j, target.index(name)] = F(c)
    return Action(H, A, side, T)


def _pair_algebras(field: Field):
    return sweedler_h4(field, HH4_NAMES), sweedler_h4(field)


def canonical_pair(field: Field, lam) -> MatchedPair:
    """The nontrivial (HH4, H4) matched pair with parameter ``lam``."""
    F = field
    lam = F(lam)
    m = F(-lam)
    A, H = _pair_algebras(F)
    both = {"1": lam, "G": m}
    left = [
        [{"1": 1}, {"G": 1}, {"X": 1}, {"GX": 1}],
        [{"1": 1}, {"G": 1}, {"X": -1}, {"GX": -1}],
        [{}, {}, both, both],
        [{}, {}, both, both],
    ]
    pos, neg = {"1": lam, "g": m}, {"1": m, "g": lam}
    right = [
        [{"1": 1}, {"1": 1}, {}, {}],
        [{"g": 1}, {"g": 1}, {}, {}],
        [{"x": 1}, {"x": -1}, pos, neg],
        [{"gx": 1}, {"gx": -1}, neg, pos],
    ]
    mp = MatchedPair(A, H, action_from_rows(H, A, "left", left),
                     action_from_rows(H, A, "right", right), label=f"lambda={lam}")
    return mp.verify()


def h4_trivial_pair(field: Field) -> MatchedPair:
    A, H = _pair_algebras(field)
    return trivial_pair(A, H)


def right_family(field: Field, j: int, a=0, b=0, c=0, d=0) -> Action:
    """Right HH4-actions on H4 of type ``j`` in 1..4 (normalized: ``1 <| h = eps(h) 1``)."""
    F = field
    if j not in (1, 2, 3, 4):
        raise ValueError("family index must be 1..4")
    A, H = _pair_algebras(F)
    a, b, c, d = (F(v) for v in (a, b, c, d))
    rows = [
        [{"1": 1}, {"1": 1}, {}, {}],
        [{"g": 1}, {"g": 1}, {}, {}],
        [{"x": 1}, {"x": 1}, {}, {}],
        [{"gx": 1}, {"gx": 1}, {}, {}],
    ]
    if j in (3, 4):
        rows[2] = [{"x": 1}, {"1": a, "g": F(-a), "x": -1}, {"1": b, "g": F(-b)}, {"1": F(-b), "g": b}]
    if j in (2, 4):
        rows[3] = [{"gx": 1}, {"1": c, "g": F(-c), "gx": -1}, {"1": d, "g": F(-d)}, {"1": F(-d), "g": d}]
    return action_from_rows(H, A, "right", rows)


def left_family(field: Field, i: int, s=0, t=0, u=0, v=0) -> Action:
    """Left H4-actions on HH4 of type ``i`` in 1..4 (normalized: ``h |> 1 = eps(h) 1``)."""
    F = field
    if i not in (1, 2, 3, 4):
        raise ValueError("family index must be 1..4")
    A, H = _pair_algebras(F)
    s, t, u, v = (F(w) for w in (s, t, u, v))
    g_row = [{"1": 1}, {"G": 1}, {"X": 1}, {"GX": 1}]
    x_row = [{}, {}, {}, {}]
    if i in (3, 4):
        g_row[2] = {"1": s, "G": F(-s), "X": -1}
        x_row[2] = {"1": t, "G": F(-t)}
    if i in (2, 4):
        g_row[3] = {"1": u, "G": F(-u), "GX": -1}
        x_row[3] = {"1": v, "G": F(-v)}
    rows = [[{"1": 1}, {"G": 1}, {"X": 1}, {"GX": 1}], g_row, x_row, list(x_row)]
    return action_from_rows(H, A, "left", rows)


_FAMILY_PARAMS = {1: (), 2: ("c", "d"), 3: ("a", "b"), 4: ("a", "b", "c", "d")}
_LEFT_PARAMS = {1: (), 2: ("u", "v"), 3: ("s", "t"), 4: ("s", "t", "u", "v")}


def family_members(field: Field, side: str) -> list[Action]:
    """Every member of the four closed-form families over F_p."""
    names = _LEFT_PARAMS if side == "left" else _FAMILY_PARAMS
    build = left_family if side == "left" else right_family
    out = []
    for j, params in names.items():
        for values in itertools.product(field.elements(), repeat=len(params)):
            out.append(build(field, j, **dict(zip(params, values))))
    return out


# -- census ---------------------------------------------------------------------------


def _generator_maps_system(C: HopfAlgebra, rho_g: np.ndarray) -> np.ndarray:
    """Linear conditions on ``rho_x`` given ``rho_g`` (unknowns ``X[r, s]`` flattened).

    ``rho_x`` acts by a (1, g)-skew-primitive, so
    ``Delta(rho_x(m)) = rho_x(m1) (x) m2 + rho_g(m1) (x) rho_x(m2)``, with
    ``eps o rho_x = 0`` and ``rho_x(1) = 0``.
    """
    F, n = C.field, C.dim
    D = C.comult.astype(np.int64)
    coef = np.zeros((n, n, n, n, n), dtype=np.int64)  # [m, p, q, r, s]
    for m in range(n):
        coef[m, :, :, :, m] += D.transpose(1, 2, 0)
    for p in range(n):
        coef[:, p, :, p, :] -= D.transpose(0, 2, 1)
    twisted = np.einsum("mjs,pj->mps", D, rho_g)  # sum_m1 D[m, m1, s] rho_g[p, m1]
    for q in range(n):
        coef[:, :, q, q, :] -= twisted
    rows = [coef.reshape(n**3, n * n)]
    counit = np.zeros((n, n, n), dtype=np.int64)  # [s', r, s]
    for s in range(n):
        counit[s, :, s] = C.counit
    rows.append(counit.reshape(n, n * n))
    unit = np.zeros((n, n, n), dtype=np.int64)  # [r', r, s]
    for r in range(n):
        unit[r, r, :] = C.unit
    rows.append(unit.reshape(n, n * n))
    return F.reduce(np.vstack(rows))


def _generators(K: HopfAlgebra):
    """Positions of (1, gamma, xi, gamma xi) in an H4-shaped acting algebra."""
    F = K.field
    if K.dim != 4:
        raise MatchedPairError("acting algebra must be four-dimensional")
    one, gam, xi = K.e(0), K.e(1), K.e(2)
    if not (F.equal(K.unit, one) and is_group_like(K, gam)
            and xi in skew_primitives(K, one, gam)
            and F.equal(K.mul(gam, xi), K.e(3))
            and F.is_zero(K.mul(xi, xi)) and F.equal(K.mul(gam, gam), one)
            and F.equal(K.mul(xi, gam), F.reduce(-K.e(3)))):
        raise MatchedPairError("acting algebra basis is not (1, g, x, gx) of Sweedler type")


def module_coalgebra_actions(H: HopfAlgebra, A: HopfAlgebra, side: str) -> list[Action]:
    """All normalized module-coalgebra actions of the given side over F_p.

    The acting algebra (H for left, A for right) must be Sweedler-shaped.
    An action is fixed by the maps ``rho_g`` and ``rho_x`` of its two
    generators: ``rho_g`` is a unitary coalgebra map, ``rho_x`` solves a
    linear system given ``rho_g``, and the pair must satisfy the defining
    relations ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``.
    """
    F = H.field
    if F.is_rational:
        raise MatchedPairError("action enumeration needs a finite field")
    acting = H if side == "left" else A
    module = A if side == "left" else H
    _generators(acting)
    n, p = module.dim, F.p
    I = F.eye(n)
    out = []
    for rho_g in coalgebra_maps(module, module, unitary=True):
        if not F.equal(rho_g @ rho_g % p, I):
            continue
        K = linalg.kernel(F, _generator_maps_system(module, rho_g))
        if K.shape[0] == 0:
            cands = np.zeros((1, n, n), dtype=np.int64)
        else:
            coeffs = np.array(list(itertools.product(range(p), repeat=K.shape[0])), dtype=np.int64)
            cands = ((coeffs @ K) % p).reshape(-1, n, n)
        sq = np.einsum("nij,njk->nik", cands, cands) % p
        gx = np.einsum("ij,njk->nik", rho_g, cands) % p
        xg = np.einsum("nij,jk->nik", cands, rho_g) % p
        ok = ~np.any(sq.reshape(len(cands), -1), axis=1)
        ok &= ~np.any(((gx + xg) % p).reshape(len(cands), -1), axis=1)
        for rho_x in cands[ok]:
            # left: (gx) |> m = g |> (x |> m); right: m <| (gx) = (m <| g) <| x
            rho_gx = rho_g @ rho_x % p if side == "left" else rho_x @ rho_g % p
            maps = [I, rho_g, rho_x, rho_gx]
            T = F.zeros((H.dim, A.dim, n))
            for k, rho in enumerate(maps):
                if side == "left":
                    T[k] = rho.T
                else:
                    T[:, k, :] = rho.T
            out.append(Action(H, A, side, T))
    out.sort(key=lambda act: tuple(act.table.reshape(-1).tolist()))
    return out


@dataclass
class Census:
    prime: int
    right_actions: int
    left_actions: int
    candidates: int
    pairs: list

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "stage1_right_actions": self.right_actions,
            "stage2_left_actions": self.left_actions,
            "stage3_candidates": self.candidates,
            "count": len(self.pairs),
            "pairs": [identify_pair(mp) for mp in self.pairs],
        }


def census_h4h4(p: int, progress: bool = False) -> Census:
    """Staged enumeration of every matched pair (HH4, H4, |>, <|) over F_p."""
    if p == 0 or p == 2:
        raise MatchedPairError("census needs an odd prime")
    F = Field(p)
    A, H = _pair_algebras(F)
    rights = module_coalgebra_actions(H, A, "right")
    lefts = module_coalgebra_actions(H, A, "left")
    for act in rights + lefts:
        rep = check_module_coalgebra(act)
        if not rep.passed:
            raise MatchedPairError(f"enumerated action fails {rep.first_failure()}")
    Rs = np.array([r.table for r in rights], dtype=np.int64)
    pairs = []
    for k, left in enumerate(lefts):
        mask = matched_pair_mask(A, H, left.table, Rs)
        for idx in np.flatnonzero(mask):
            pairs.append(MatchedPair(A, H, left, rights[idx]).verify())
        if progress and (k + 1) % 100 == 0:
            print(f"census p={p}: {k + 1}/{len(lefts)} left actions", file=sys.stderr)
    return Census(p, len(rights), len(lefts), len(rights) * len(lefts), pairs)


def enumerate_matched_pairs_h4h4(p: int) -> list[MatchedPair]:
    """Every matched pair (HH4, H4, |>, <|) over F_p, deduplicated."""
    return census_h4h4(p).pairs


def identify_pair(mp: MatchedPair) -> str:
    """``"trivial"``, ``"lambda=<v>"`` for a canonical pair, else ``"other"``."""
    F = mp.field
    A, H = _pair_algebras(F)
    if mp == trivial_pair(A, H):
        return "trivial"
    # lambda can be read off x <| X = lambda - lambda g
    lam = mp.right.table[H.index("x"), A.index("X"), H.index("1")]
    if mp == canonical_pair(F, lam):
        return f"lambda={F.format(lam)}"
    return "other"
