"""Exact scalar fields: the rationals and prime fields F_p with p odd.

Scalars are plain Python values: ``Fraction`` over Q (always in lowest
terms, positive denominator) and ``int`` in ``[0, p)`` over F_p.  Arrays
of scalars are numpy arrays with ``dtype=object`` over Q and ``int64``
over F_p.  Every array leaving this module is reduced to canonical form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class Field:
    """Field descriptor.  ``p == 0`` means Q, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_prime(self.p):
            raise FieldError(f"{self.p} is not a prime")
        # int64 contractions: products of two reduced entries summed over
        # a few thousand terms must not overflow
        if self.p > 2**24:
            raise FieldError(f"prime {self.p} too large for int64 storage")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accept ``Q``, ``Fp:5``, ``F5`` or a bare prime ``5``."""
        t = text.strip()
        if t.upper() in ("Q", "QQ"):
            return cls(0)
        for prefix in ("Fp:", "FP:", "fp:", "F", "f"):
            if t.startswith(prefix):
                t = t[len(prefix):]
                break
        try:
            return cls(int(t))
        except ValueError:
            raise FieldError(f"cannot parse field {text!r}") from None

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def dtype(self):
        return object if self.p == 0 else np.int64

    def __str__(self):
        return "Q" if self.p == 0 else f"F{self.p}"

    # -- scalars -------------------------------------------------------------

    def __call__(self, value) -> int | Fraction:
        """Canonical representative of ``value`` (int, Fraction or string)."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, value):
        value = self(value)
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / value
        return pow(int(value), -1, self.p)

    def format(self, value) -> str:
        value = self(value)
        return str(value)

    def elements(self):
        if self.p == 0:
            raise FieldError("Q is infinite")
        return range(self.p)

    def units(self):
        return range(1, self.p) if self.p else self.elements()

    # -- arrays --------------------------------------------------------------

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        if self.p == 0:
            out = np.empty(arr.shape, dtype=object)
            for idx, v in np.ndenumerate(arr):
                out[idx] = Fraction(v)
            return out
        out = np.empty(arr.shape, dtype=np.int64)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v)
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Canonicalize the result of integer/object arithmetic."""
        if self.p == 0:
            return arr
        return np.mod(arr, self.p)

    def zeros(self, shape) -> np.ndarray:
        if self.p == 0:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self(1)
        return out

    def basis_vector(self, n: int, i: int) -> np.ndarray:
        out = self.zeros(n)
        out[i] = self(1)
        return out

    def vectors(self, basis):
        """All F_p-linear combinations of ``basis`` (list of vectors)."""
        if self.p == 0:
            raise FieldError("cannot enumerate a subspace over Q")
        basis = [np.asarray(b) for b in basis]
        if not basis:
            raise FieldError("empty basis; pass the ambient dimension instead")
        stack = np.array(basis, dtype=np.int64)
        for coeffs in itertools.product(range(self.p), repeat=len(basis)):
            yield np.mod(np.asarray(coeffs, dtype=np.int64) @ stack, self.p)

    def contract(self, subscripts: str, *operands, sparse: bool = False):
        """Pairwise left-to-right einsum with reduction after every step.

        Over F_p this is dense numpy work on int64 with a reduction after each
        pairwise step, which keeps intermediates bounded.  Over Q the
        structure tensors are very sparse, so the contraction runs on
        dictionaries of nonzero entries instead of object arrays; with
        ``sparse=True`` that dictionary is returned as is (only useful for
        :meth:`mismatches`).
        """
        inputs, output = subscripts.replace(" ", "").split("->")
        terms = inputs.split(",")
        if len(terms) != len(operands):
            raise ValueError("operand count does not match subscripts")
        operands = [np.asarray(op) for op in operands]
        if self.p == 0 or sparse:
            return _sparse_contract(terms, output, operands, dense=not sparse, p=self.p)
        acc, acc_idx = operands[0], terms[0]
        for k in range(1, len(terms)):
            later = set(output).union(*terms[k + 1:])
            keep = [c for c in dict.fromkeys(acc_idx + terms[k]) if c in later]
            step = f"{acc_idx},{terms[k]}->{''.join(keep)}"
            acc = self.reduce(np.einsum(step, acc, operands[k]))
            acc_idx = "".join(keep)
        if acc_idx != output:
            acc = self.reduce(np.einsum(f"{acc_idx}->{output}", acc))
        return acc

    def mismatches(self, a, b):
        """Positions where ``a`` and ``b`` differ (arrays or sparse dicts)."""
        if isinstance(a, dict) or isinstance(b, dict):
            a = a if isinstance(a, dict) else _nonzeros(np.asarray(a))
            b = b if isinstance(b, dict) else _nonzeros(np.asarray(b))
            return sorted(k for k in a.keys() | b.keys() if a.get(k, 0) != b.get(k, 0))
        a = self.reduce(np.asarray(a))
        b = self.reduce(np.asarray(b))
        return np.argwhere(a != b)

    def equal(self, a, b) -> bool:
        a = self.reduce(np.asarray(a))
        b = self.reduce(np.asarray(b))
        return a.shape == b.shape and bool(np.all(a == b))

    def is_zero(self, a) -> bool:
        return bool(np.all(self.reduce(np.asarray(a)) == 0))


Q = Field(0)


def _nonzeros(arr: np.ndarray) -> dict:
    if arr.ndim == 0:
        return {(): arr[()]} if arr[()] != 0 else {}
    nz = np.nonzero(arr != 0)
    # integral Fractions become ints: int arithmetic is much cheaper
    vals = [v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v
            for v in arr[nz].tolist()]
    return dict(zip(zip(*(i.tolist() for i in nz)), vals))


def _sparse_contract(terms, output, operands, dense=True, p=0):
    sizes = {}
    for t, op in zip(terms, operands):
        if len(t) != op.ndim:
            raise ValueError(f"subscript {t!r} does not match operand of rank {op.ndim}")
        for c, n in zip(t, op.shape):
            sizes[c] = n
    acc, acc_idx = _nonzeros(operands[0]), terms[0]
    for k in range(1, len(terms)):
        b_idx = terms[k]
        later = set(output).union(*terms[k + 1:])
        keep = [c for c in dict.fromkeys(acc_idx + b_idx) if c in later]
        shared = [c for c in dict.fromkeys(b_idx) if c in acc_idx]
        a_pos = [acc_idx.index(c) for c in shared]
        b_pos = [b_idx.index(c) for c in shared]
        src = [(0, acc_idx.index(c)) if c in acc_idx else (1, b_idx.index(c)) for c in keep]
        groups: dict = {}
        for bt, bv in _nonzeros(operands[k]).items():
            groups.setdefault(tuple(bt[i] for i in b_pos), []).append((bt, bv))
        out: dict = {}
        for at, av in acc.items():
            for bt, bv in groups.get(tuple(at[i] for i in a_pos), ()):
                pair = (at, bt)
                key = tuple(pair[w][i] for w, i in src)
                out[key] = out.get(key, 0) + av * bv
        if p:
            out = {key: v % p for key, v in out.items()}
        acc = {key: v for key, v in out.items() if v != 0}
        acc_idx = "".join(keep)
    pos = [acc_idx.index(c) for c in output]
    if not dense:
        out = {}
        for key, v in acc.items():
            k2 = tuple(key[i] for i in pos)
            out[k2] = out.get(k2, 0) + v
        if p:
            out = {k: v % p for k, v in out.items()}
        return {k: v for k, v in out.items() if v != 0}
    result = np.empty(tuple(sizes[c] for c in output), dtype=object)
    result.fill(Fraction(0))
    for key, v in acc.items():
        idx = tuple(key[i] for i in pos)
        result[idx] = Fraction(result[idx] + v)
    return result
