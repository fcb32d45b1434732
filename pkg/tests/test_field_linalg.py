from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcalc import Field, FieldError, linalg

PRIMES = [3, 5, 7, 11]


def test_parse_variants():
    assert Field.parse("Q") == Field(0)
    assert Field.parse("Fp:5") == Field(5)
    assert Field.parse("F7") == Field(7)
    assert Field.parse("3") == Field(3)


@pytest.mark.parametrize("bad", ["F2", "4", "Fp:9", "R", "F-1x"])
def test_parse_rejects(bad):
    with pytest.raises(FieldError):
        Field.parse(bad)


def test_scalar_coercion():
    F = Field(5)
    assert F("1/2") == 3
    assert F(-1) == 4
    assert F.inv(2) == 3
    assert Field(0)("2/4") == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_q_is_not_enumerable():
    with pytest.raises(FieldError):
        list(Field(0).elements())


def matrices(p, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-p * 3, p * 3), min_size=c, max_size=c),
                min_size=r, max_size=r,
            )
        )
    )


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0] + PRIMES).flatmap(lambda p: st.tuples(st.just(p), matrices(max(p, 4)))))
def test_kernel_is_annihilated_and_rank_nullity(data):
    p, rows = data
    F = Field(p)
    M = F.array(rows)
    K = linalg.kernel(F, M)
    assert K.shape[0] + linalg.rank(F, M) == M.shape[1]
    for v in K:
        assert F.is_zero(F.reduce(M @ v))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0] + PRIMES).flatmap(lambda p: st.tuples(st.just(p), matrices(max(p, 4), 4, 4))))
def test_rref_is_idempotent(data):
    p, rows = data
    F = Field(p)
    R, piv = linalg.rref(F, F.array(rows))
    R2, piv2 = linalg.rref(F, R)
    assert piv == piv2
    assert F.equal(R, R2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0] + PRIMES), st.lists(st.integers(-9, 9), min_size=9, max_size=9))
def test_inverse_round_trip(p, entries):
    F = Field(p)
    M = F.array(np.array(entries, dtype=object).reshape(3, 3))
    if linalg.rank(F, M) < 3:
        with pytest.raises(np.linalg.LinAlgError):
            linalg.inverse(F, M)
        return
    inv = linalg.inverse(F, M)
    assert F.equal(F.reduce(M @ inv), F.eye(3))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_contract_matches_numpy_mod_p(p, data):
    F = Field(p)
    shape = (3, 4)
    ints = st.integers(0, p - 1)
    a = np.array(data.draw(st.lists(ints, min_size=12, max_size=12)), dtype=np.int64).reshape(shape)
    b = np.array(data.draw(st.lists(ints, min_size=20, max_size=20)), dtype=np.int64).reshape(4, 5)
    c = np.array(data.draw(st.lists(ints, min_size=15, max_size=15)), dtype=np.int64).reshape(5, 3)
    expect = np.einsum("ij,jk,ki->i", a, b, c) % p
    assert F.equal(F.contract("ij,jk,ki->i", a, b, c), expect)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_rational_contract_matches_exact_sum(data):
    F = Field(0)
    fr = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    a = F.array(np.array(data.draw(st.lists(fr, min_size=6, max_size=6)), dtype=object).reshape(2, 3))
    b = F.array(np.array(data.draw(st.lists(fr, min_size=6, max_size=6)), dtype=object).reshape(3, 2))
    got = F.contract("ij,jk->ik", a, b)
    expect = a.dot(b)
    assert F.equal(got, expect)


def test_in_span_and_same_span():
    F = Field(5)
    basis = F.array([[1, 0, 2], [0, 1, 1]])
    assert linalg.in_span(F, basis, F.array([2, 3, 2 * 2 + 3]))
    assert not linalg.in_span(F, basis, F.array([0, 0, 1]))
    assert linalg.same_span(F, basis, F.array([[1, 1, 3], [1, 4, 1]]))
