"""JSON interchange for Hopf algebras and matched pairs.

Algebra documents look like::

    {"field": "Q" | {"Fp": p}, "dim": n, "basis": [...],
     "mult": [[i, j, k, "c"], ...], "unit": ["c", ...],
     "comult": [[i, j, k, "c"], ...], "counit": ["c", ...],
     "antipode": [["c", ...], ...]}

Scalars are strings (``"a/b"`` over Q, residues over F_p).  Tensor
entries that are omitted are zero; listed entries are sorted.  The
antipode is written row by row in the column-image convention, so row
``j`` column ``i`` is the coefficient of ``e_j`` in ``S(e_i)``.

Matched pairs are ``{"A": algebra, "H": algebra, "left": entries,
"right": entries}`` with action entries ``[h, a, k, "c"]``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import HopfAlgebra
from .field import Field, FieldError
from .matched_pair import Action, MatchedPair


class FormatError(ValueError):
    pass


def field_to_json(F: Field):
    return "Q" if F.is_rational else {"Fp": F.p}


def field_from_json(value) -> Field:
    if value == "Q":
        return Field(0)
    if isinstance(value, dict) and set(value) == {"Fp"} and isinstance(value["Fp"], int):
        return Field(value["Fp"])
    if isinstance(value, str):
        return Field.parse(value)
    raise FormatError(f"bad field descriptor {value!r}")


def _scalar(F: Field, c) -> str:
    return str(F(c))


def _entries(F: Field, T: np.ndarray) -> list:
    out = []
    for idx, c in np.ndenumerate(T):
        if c != 0:
            out.append([*(int(i) for i in idx), _scalar(F, c)])
    return out


def _dense(F: Field, entries, shape, name) -> np.ndarray:
    T = F.zeros(shape)
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != len(shape) + 1:
            raise FormatError(f"{name}: malformed entry {entry!r}")
        *idx, c = entry
        if not all(isinstance(i, int) and 0 <= i < n for i, n in zip(idx, shape)):
            raise FormatError(f"{name}: index out of range in {entry!r}")
        T[tuple(idx)] = F(c)
    return T


def algebra_to_json(H: HopfAlgebra) -> dict:
    F = H.field
    return {
        "field": field_to_json(F),
        "dim": H.dim,
        "basis": list(H.basis),
        "mult": _entries(F, H.mult),
        "unit": [_scalar(F, c) for c in H.unit],
        "comult": _entries(F, H.comult),
        "counit": [_scalar(F, c) for c in H.counit],
        "antipode": [[_scalar(F, c) for c in row] for row in H.antipode],
    }


def algebra_from_json(doc: dict) -> HopfAlgebra:
    try:
        F = field_from_json(doc["field"])
        n = doc["dim"]
        if not isinstance(n, int) or n < 1:
            raise FormatError("dim must be a positive integer")
        basis = doc.get("basis") or [f"e{i}" for i in range(n)]
        if len(basis) != n:
            raise FormatError("basis length does not match dim")
        vectors = {}
        for key in ("unit", "counit"):
            if len(doc[key]) != n:
                raise FormatError(f"{key} must have {n} entries")
            vectors[key] = F.array([F(c) for c in doc[key]])
        S = doc["antipode"]
        if len(S) != n or any(len(row) != n for row in S):
            raise FormatError(f"antipode must be {n} x {n}")
        return HopfAlgebra(
            field=F,
            basis=tuple(basis),
            mult=_dense(F, doc["mult"], (n, n, n), "mult"),
            unit=vectors["unit"],
            comult=_dense(F, doc["comult"], (n, n, n), "comult"),
            counit=vectors["counit"],
            antipode=F.array([[F(c) for c in row] for row in S]),
        )
    except KeyError as exc:
        raise FormatError(f"missing key {exc}") from None
    except (TypeError, ZeroDivisionError, FieldError) as exc:
        raise FormatError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None


def pair_to_json(mp: MatchedPair) -> dict:
    F = mp.field
    return {
        "A": algebra_to_json(mp.A),
        "H": algebra_to_json(mp.H),
        "left": _entries(F, mp.left.table),
        "right": _entries(F, mp.right.table),
    }


def pair_from_json(doc: dict) -> MatchedPair:
    try:
        A = algebra_from_json(doc["A"])
        H = algebra_from_json(doc["H"])
    except KeyError as exc:
        raise FormatError(f"missing key {exc}") from None
    if A.field != H.field:
        raise FormatError("A and H live over different fields")
    F = A.field
    left = _dense(F, doc.get("left", []), (H.dim, A.dim, A.dim), "left")
    right = _dense(F, doc.get("right", []), (H.dim, A.dim, H.dim), "right")
    return MatchedPair(A, H, Action(H, A, "left", left), Action(H, A, "right", right))


def dumps(doc) -> str:
    """Deterministic rendering: fixed key order, compact rows."""
    return json.dumps(doc, ensure_ascii=False, indent=1, sort_keys=False) + "\n"


def load(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None
