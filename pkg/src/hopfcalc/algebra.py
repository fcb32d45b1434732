"""Finite-dimensional Hopf algebras given by structure constants.

Conventions (``n = dim``, basis ``e_0 .. e_{n-1}``)::

    e_i e_j   = sum_k mult[i, j, k] e_k
    1         = sum_k unit[k] e_k
    Delta(e_i) = sum_{j,k} comult[i, j, k] e_j (x) e_k
    eps(e_i)  = counit[i]
    S(e_i)    = sum_j antipode[j, i] e_j      (columns are images)

Elements are coordinate vectors; a tensor ``a (x) b`` is an ``n x n``
coefficient matrix.  Linear maps between algebras are matrices whose
columns are the images of basis vectors.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from . import linalg
from .field import Field
from .report import Report


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    field: Field
    basis: tuple[str, ...]
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    verified: bool = False

    def __post_init__(self):
        n = len(self.basis)
        if n == 0:
            raise AlgebraError("dimension must be positive")
        if len(set(self.basis)) != n:
            raise AlgebraError("basis names must be distinct")
        shapes = {
            "mult": (n, n, n),
            "unit": (n,),
            "comult": (n, n, n),
            "counit": (n,),
            "antipode": (n, n),
        }
        for name, shape in shapes.items():
            arr = self.field.array(getattr(self, name))
            if arr.shape != shape:
                raise AlgebraError(f"{name} has shape {arr.shape}, expected {shape}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "basis", tuple(self.basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.basis == other.basis
            and all(
                self.field.equal(getattr(self, k), getattr(other, k))
                for k in ("mult", "unit", "comult", "counit", "antipode")
            )
        )

    def same_structure(self, other: "HopfAlgebra") -> bool:
        """Coefficient equality, ignoring basis names."""
        return self.field == other.field and self.dim == other.dim and all(
            self.field.equal(getattr(self, k), getattr(other, k))
            for k in ("mult", "unit", "comult", "counit", "antipode")
        )

    def renamed(self, names) -> "HopfAlgebra":
        return dataclasses.replace(self, basis=tuple(names))

    # -- elements ------------------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise AlgebraError(f"no basis element named {name!r}") from None

    def e(self, name_or_index) -> np.ndarray:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return self.field.basis_vector(self.dim, i)

    def elem(self, **coeffs) -> np.ndarray:
        """Element from keyword coefficients; ``one`` stands for basis name ``1``."""
        v = self.field.zeros(self.dim)
        for name, c in coeffs.items():
            v[self.index("1" if name == "one" else name)] = self.field(c)
        return v

    def mul(self, a, b) -> np.ndarray:
        return self.field.contract("i,j,ijk->k", a, b, self.mult)

    def delta(self, a) -> np.ndarray:
        return self.field.contract("i,ijk->jk", a, self.comult)

    def eps(self, a):
        return self.field.reduce(np.asarray(np.dot(self.counit, a)))[()]

    def S(self, a) -> np.ndarray:
        return self.field.reduce(self.antipode @ a)

    def format(self, v) -> str:
        return format_vector(self.field, self.basis, v)

    def format_tensor(self, t, other: "HopfAlgebra | None" = None) -> str:
        other = other or self
        terms = []
        for (i, j), c in np.ndenumerate(self.field.reduce(np.asarray(t))):
            if c != 0:
                terms.append(_term(signed(self.field, c), f"{self.basis[i]}⊗{other.basis[j]}"))
        return _join(terms)

    # -- derived tensors -----------------------------------------------------

    def comult3(self) -> np.ndarray:
        """Twofold coproduct: ``c3[i, a, b, c]`` = coeff of e_a (x) e_b (x) e_c."""
        return self.field.contract("iam,mbc->iabc", self.comult, self.comult)

    def antipode_inverse(self) -> np.ndarray:
        try:
            return linalg.inverse(self.field, self.antipode)
        except np.linalg.LinAlgError:
            raise AlgebraError("antipode not invertible") from None

    def verify(self) -> "HopfAlgebra":
        """Return a copy flagged verified, or raise if any axiom fails."""
        rep = check_hopf_axioms(self)
        if not rep.passed:
            name, where = rep.first_failure()
            raise AlgebraError(f"axiom {name} fails at {where}")
        return dataclasses.replace(self, verified=True)


def _term(c, name) -> str:
    if name == "1":
        return str(c)
    if c == 1:
        return name
    if c == -1:
        return f"-{name}"
    return f"{c}{name}" if "/" not in str(c) else f"({c}){name}"


def _join(terms) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def signed(field: Field, c):
    """Symmetric representative: F_p values above p/2 print as negatives."""
    if field.p and c > field.p // 2:
        return int(c) - field.p
    return c


def format_vector(field: Field, names, v) -> str:
    v = field.reduce(np.asarray(v))
    terms = [_term(signed(field, c), names[i]) for i, c in enumerate(v) if c != 0]
    return _join(terms)


# -- axiom checks --------------------------------------------------------------


def _locate(F: Field, lhs, rhs, labels) -> list[str]:
    out = []
    for idx in F.mismatches(lhs, rhs)[:20]:
        idx = tuple(int(i) for i in idx)
        out.append(labels(idx))
    # collapse duplicates while keeping order
    return list(dict.fromkeys(out))


def check_hopf_axioms(H: HopfAlgebra) -> Report:
    F, n = H.field, H.dim
    m, u, D, e, S = H.mult, H.unit, H.comult, H.counit, H.antipode
    I = F.eye(n)
    names = H.basis
    rep = Report("hopf")

    def at(k):
        return lambda idx: ",".join(names[i] for i in idx[:k])

    lhs = F.contract("ijm,mkl->ijkl", m, m, sparse=True)
    rhs = F.contract("jkm,iml->ijkl", m, m, sparse=True)
    rep.record("associativity", _locate(F, lhs, rhs, at(3)))

    left = F.contract("i,ijk->jk", u, m, sparse=True)
    right = F.contract("j,ijk->ik", u, m, sparse=True)
    rep.record("unit", _locate(F, left, I, at(1)) + _locate(F, right, I, at(1)))

    lhs = F.contract("imc,mab->iabc", D, D, sparse=True)
    rhs = F.contract("iam,mbc->iabc", D, D, sparse=True)
    rep.record("coassociativity", _locate(F, lhs, rhs, at(1)))

    left = F.contract("ijk,j->ik", D, e, sparse=True)
    right = F.contract("ijk,k->ij", D, e, sparse=True)
    rep.record("counit", _locate(F, left, I, at(1)) + _locate(F, right, I, at(1)))

    # Delta(e_i e_j) = Delta(e_i) Delta(e_j)
    lhs = F.contract("ijm,mab->ijab", m, D, sparse=True)
    rhs = F.contract("ipq,pra,jrs,qsb->ijab", D, m, D, m, sparse=True)
    rep.record("comult multiplicative", _locate(F, lhs, rhs, at(2)))
    dunit = F.contract("i,iab->ab", u, D, sparse=True)
    rep.record("comult unital", ["1"] if _locate(F, dunit, outer(F, u, u), at(0)) else [])

    lhs = F.contract("ijm,m->ij", m, e, sparse=True)
    rhs = outer(F, e, e)
    rep.record("counit multiplicative", _locate(F, lhs, rhs, at(2)))
    rep.record("counit unital", [] if F.equal(np.dot(e, u), F(1)) else ["1"])

    target = outer(F, e, u)  # [i, m] = eps(e_i) 1_m
    left = F.contract("ijk,lj,lkm->im", D, S, m, sparse=True)
    right = F.contract("ijk,lk,jlm->im", D, S, m, sparse=True)
    rep.record("antipode left", _locate(F, left, target, at(1)))
    rep.record("antipode right", _locate(F, right, target, at(1)))
    return rep


def outer(field: Field, a, b) -> np.ndarray:
    return field.reduce(np.multiply.outer(np.asarray(a), np.asarray(b)))


# -- maps between algebras ---------------------------------------------------


def check_coalgebra_map(f, C: HopfAlgebra, D: HopfAlgebra, unitary: bool = True) -> Report:
    """``f`` (dim D x dim C) is a coalgebra map; ``unitary`` adds f(1) = 1."""
    F = C.field
    rep = Report("coalgebra map")
    lhs = F.contract("ji,jab->iab", f, D.comult, sparse=True)
    rhs = F.contract("icd,ac,bd->iab", C.comult, f, f, sparse=True)
    rep.record("comultiplicative", _locate(F, lhs, rhs, lambda idx: C.basis[idx[0]]))
    lhs = F.contract("ji,j->i", f, D.counit, sparse=True)
    rep.record("counital", _locate(F, lhs, C.counit, lambda idx: C.basis[idx[0]]))
    if unitary:
        rep.record("unitary", [] if F.equal(F.reduce(f @ C.unit), D.unit) else ["1"])
    return rep


def check_bialgebra_map(f, A: HopfAlgebra, B: HopfAlgebra) -> Report:
    F = A.field
    rep = check_coalgebra_map(f, A, B, unitary=True)
    rep.title = "bialgebra map"
    lhs = F.contract("ijk,ak->ija", A.mult, f, sparse=True)
    rhs = F.contract("bi,cj,bca->ija", f, f, B.mult, sparse=True)
    rep.record("multiplicative", _locate(F, lhs, rhs, lambda idx: f"{A.basis[idx[0]]},{A.basis[idx[1]]}"))
    return rep


def is_trivial_map(f, C: HopfAlgebra, D: HopfAlgebra) -> bool:
    """``f = 1_D eps_C``."""
    return C.field.equal(f, outer(C.field, D.unit, C.counit))


# -- constructions -------------------------------------------------------------


def _product_names(a_names, b_names):
    def join(a, b):
        if a == "1":
            return b
        if b == "1":
            return a
        return a + b

    names = [join(a, b) for a in a_names for b in b_names]
    if len(set(names)) != len(names):
        names = [f"{a}⊗{b}" for a in a_names for b in b_names]
    return names


def tensor_product(A: HopfAlgebra, B: HopfAlgebra) -> HopfAlgebra:
    if A.field != B.field:
        raise AlgebraError(f"field mismatch: {A.field} vs {B.field}")
    F = A.field
    n = A.dim * B.dim

    def kron3(x, y):
        return F.contract("ikm,jln->ijklmn", x, y).reshape(n, n, n)

    return HopfAlgebra(
        field=F,
        basis=tuple(_product_names(A.basis, B.basis)),
        mult=kron3(A.mult, B.mult),
        unit=F.contract("i,j->ij", A.unit, B.unit).reshape(n),
        comult=kron3(A.comult, B.comult),
        counit=F.contract("i,j->ij", A.counit, B.counit).reshape(n),
        antipode=F.contract("ik,jl->ijkl", A.antipode, B.antipode).reshape(n, n),
        verified=A.verified and B.verified,
    )


def dual(H: HopfAlgebra) -> HopfAlgebra:
    """Linear dual on the dual basis; names get a ``*`` suffix."""
    return HopfAlgebra(
        field=H.field,
        basis=tuple(_dual_name(b) for b in H.basis),
        mult=H.comult.transpose(1, 2, 0),
        unit=H.counit,
        comult=H.mult.transpose(2, 0, 1),
        counit=H.unit,
        antipode=H.antipode.T,
        verified=H.verified,
    )


def _dual_name(name: str) -> str:
    if name.startswith("(") and name.endswith(")*"):
        return name[1:-2]
    if name.endswith("*"):
        return name[:-1]
    return f"({name})*" if len(name) > 1 else f"{name}*"


def twist(H: HopfAlgebra, flip_mult: bool, flip_comult: bool) -> HopfAlgebra:
    """``H^op`` / ``H^cop`` / ``H^op,cop`` on the same basis."""
    if not flip_mult and not flip_comult:
        return H
    if flip_mult and flip_comult:
        S = H.antipode
    else:
        S = H.antipode_inverse()
    return dataclasses.replace(
        H,
        mult=H.mult.transpose(1, 0, 2) if flip_mult else H.mult,
        comult=H.comult.transpose(0, 2, 1) if flip_comult else H.comult,
        antipode=S,
    )


def change_basis(H: HopfAlgebra, T, names) -> HopfAlgebra:
    """Rewrite ``H`` in the basis whose old coordinates are the columns of ``T``."""
    F = H.field
    T = F.array(T)
    Ti = linalg.inverse(F, T)
    return HopfAlgebra(
        field=F,
        basis=tuple(names),
        mult=F.contract("ai,bj,abc,kc->ijk", T, T, H.mult, Ti),
        unit=F.reduce(Ti @ H.unit),
        comult=F.contract("ai,abc,jb,kc->ijk", T, H.comult, Ti, Ti),
        counit=F.reduce(H.counit @ T),
        antipode=F.reduce(Ti @ H.antipode @ T),
        verified=H.verified,
    )
