"""Named Hopf algebras: Sweedler's H4, k[C2], the tensor square and H16(lambda)."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .algebra import HopfAlgebra, tensor_product
from .field import Field
from .report import Report

H4_NAMES = ("1", "g", "x", "gx")
HH4_NAMES = ("1", "G", "X", "GX")


def sweedler_h4(field: Field, names=H4_NAMES) -> HopfAlgebra:
    """Sweedler's algebra on the ordered basis (1, g, x, gx).

    ``names=HH4_NAMES`` gives the copy generated by G and X.
    """
    F = field
    m = F.zeros((4, 4, 4))
    one, g, x, gx = range(4)
    table = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1}, (one, gx): {gx: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {gx: 1}, (g, gx): {x: 1},
        (x, one): {x: 1}, (x, g): {gx: -1},
        (gx, one): {gx: 1}, (gx, g): {x: -1},
    }
    for (i, j), out in table.items():
        for k, c in out.items():
            m[i, j, k] = F(c)
    D = F.zeros((4, 4, 4))
    D[one, one, one] = F(1)
    D[g, g, g] = F(1)
    D[x, x, one] = F(1)
    D[x, g, x] = F(1)
    D[gx, gx, g] = F(1)
    D[gx, one, gx] = F(1)
    S = F.zeros((4, 4))
    S[one, one] = F(1)
    S[g, g] = F(1)
    S[gx, x] = F(-1)   # S(x) = -gx
    S[x, gx] = F(1)    # S(gx) = x
    return HopfAlgebra(
        field=F, basis=tuple(names), mult=m, unit=F.basis_vector(4, one),
        comult=D, counit=F.array([1, 1, 0, 0]), antipode=S,
    ).verify()


def group_algebra_c2(field: Field) -> HopfAlgebra:
    F = field
    m = F.zeros((2, 2, 2))
    m[0, 0, 0] = m[0, 1, 1] = m[1, 0, 1] = m[1, 1, 0] = F(1)
    D = F.zeros((2, 2, 2))
    D[0, 0, 0] = D[1, 1, 1] = F(1)
    return HopfAlgebra(
        field=F, basis=("1", "g"), mult=m, unit=F.array([1, 0]),
        comult=D, counit=F.array([1, 1]), antipode=F.eye(2),
    ).verify()


def trivial_algebra(field: Field) -> HopfAlgebra:
    """The one-dimensional Hopf algebra k."""
    F = field
    one = F.array([[[1]]])
    return HopfAlgebra(
        field=F, basis=("1",), mult=one, unit=F.array([1]), comult=one,
        counit=F.array([1]), antipode=F.array([[1]]),
    ).verify()


def h4_tensor_h4(field: Field) -> HopfAlgebra:
    """HH4 (x) H4 on the A-major basis, same ordering as the bicrossed products."""
    return tensor_product(sweedler_h4(field, HH4_NAMES), sweedler_h4(field))


def h16_lambda(field: Field, lam) -> HopfAlgebra:
    """H16(lambda) as the bicrossed product of the canonical (HH4, H4) pair."""
    from .bicrossed import bicrossed_product
    from .matched_pair import canonical_pair

    return bicrossed_product(canonical_pair(field, lam))


def by_name(name: str, field: Field, lam=None) -> HopfAlgebra:
    """Resolve ``h4``, ``kc2``, ``k``, ``h4xh4`` or ``h16:<lambda>``."""
    key = name.strip().lower()
    if key == "h4":
        return sweedler_h4(field)
    if key == "hh4":
        return sweedler_h4(field, HH4_NAMES)
    if key == "kc2":
        return group_algebra_c2(field)
    if key == "k":
        return trivial_algebra(field)
    if key in ("h4xh4", "tensor"):
        return h4_tensor_h4(field)
    if key.startswith("h16"):
        _, _, rest = key.partition(":")
        if rest:
            lam = rest
        if lam is None:
            raise KeyError("h16 needs a lambda: h16:<lambda>")
        return h16_lambda(field, field(lam))
    if key == "double":
        from .double import drinfeld_double
        return drinfeld_double(sweedler_h4(field))
    raise KeyError(f"unknown preset {name!r}")


# -- presentations ------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    """``lhs = rhs`` with each side a list of ``(coefficient, word)`` pairs.

    A word is a tuple of generator positions; the empty word is the unit.
    """

    lhs: tuple
    rhs: tuple
    label: str = ""


def parse_relation(text: str, gens: list[str], field: Field) -> Relation:
    """Parse e.g. ``"xX + Xx = 3 - 3Gg"`` over the given generator names."""
    if text.count("=") != 1:
        raise ValueError(f"relation needs exactly one '=': {text!r}")
    left, right = text.split("=")
    return Relation(
        tuple(_parse_side(left, gens, field)), tuple(_parse_side(right, gens, field)), text.strip()
    )


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z]*)\s*")


def _parse_side(text, gens, field):
    names = sorted(gens, key=len, reverse=True)
    out = []
    s = text.strip()
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if mt is None or mt.end() == pos:
            raise ValueError(f"cannot parse {s[pos:]!r}")
        sign, coeff, word = mt.groups()
        pos = mt.end()
        if coeff is None and not word:
            if sign:
                raise ValueError(f"dangling sign in {text!r}")
            continue
        c = field(coeff) if coeff is not None else field(1)
        if sign == "-":
            c = field(-c)
        letters = []
        rest = word
        while rest:
            for n in names:
                if rest.startswith(n):
                    letters.append(gens.index(n))
                    rest = rest[len(n):]
                    break
            else:
                raise ValueError(f"unknown generator in {word!r}")
        out.append((c, tuple(letters)))
    return out


def evaluate_word(H: HopfAlgebra, gens: list[int], word) -> np.ndarray:
    v = H.unit.copy()
    for letter in word:
        v = H.mul(v, H.e(gens[letter]))
    return v


def evaluate_side(H: HopfAlgebra, gens: list[int], side) -> np.ndarray:
    F = H.field
    total = F.zeros(H.dim)
    for c, word in side:
        total = F.reduce(total + c * evaluate_word(H, gens, word))
    return total


def verify_presentation(H: HopfAlgebra, gens: list[int], rels) -> Report:
    """Evaluate every relation by structure-constant multiplication."""
    for g in gens:
        if not 0 <= g < H.dim:
            raise IndexError(f"generator index {g} out of range")
    rep = Report("presentation")
    for k, rel in enumerate(rels):
        lhs = evaluate_side(H, gens, rel.lhs)
        rhs = evaluate_side(H, gens, rel.rhs)
        label = rel.label or f"relation {k}"
        fails = [] if H.field.equal(lhs, rhs) else [f"lhs = {H.format(lhs)}, rhs = {H.format(rhs)}"]
        rep.record(label, fails)
    return rep


H16_GENERATORS = ["g", "x", "G", "X"]


def h16_relations(field: Field, lam) -> list[Relation]:
    lam = field(lam)
    texts = [
        "gg = 1", "GG = 1", "xx = 0", "XX = 0", "gx = -xg", "GX = -XG",
        "gG = Gg", "gX = -Xg", "xG = -Gx",
    ]
    rels = [parse_relation(t, H16_GENERATORS, field) for t in texts]
    g, x, G, X = range(4)
    rels.append(Relation(
        ((field(1), (x, X)), (field(1), (X, x))),
        ((lam, ()), (field(-lam), (G, g))),
        "xX + Xx = lambda(1 - Gg)",
    ))
    return rels


def h16_generator_indices(H: HopfAlgebra) -> list[int]:
    return [H.index(n) for n in H16_GENERATORS]
