import numpy as np
import pytest

from hopfcalc import (Field, canonical_double_actions, canonical_pair, change_basis,
                      check_hopf_axioms, drinfeld_double)
from hopfcalc.linalg import inverse
from hopfcalc.presets import HH4_NAMES, group_algebra_c2, sweedler_h4


def test_double_is_hopf(field):
    D = drinfeld_double(sweedler_h4(field))
    assert D.dim == 16
    assert check_hopf_axioms(D).passed


def test_double_of_group_algebra(field):
    D = drinfeld_double(group_algebra_c2(field))
    assert D.dim == 4
    assert check_hopf_axioms(D).passed
    # C2 is abelian, so the double is commutative
    assert field.equal(D.mult, D.mult.transpose(1, 0, 2))


def test_x_acts_on_X(field):
    H = sweedler_h4(field)
    mp = canonical_double_actions(H)
    X = mp.A.elem(**{"x*": 1, "(gx)*": 1})
    assert H.format(mp.right(H.e("x"), X)) == "1 - g"


def test_double_is_canonical_pair_after_rebasing(field):
    # rewrite (H4*)^cop in the basis 1, G = 1* - g*, X = x* + (gx)*, GX
    H = sweedler_h4(field)
    mp = canonical_double_actions(H)
    A = mp.A
    G = A.elem(**{"1*": 1, "g*": -1})
    X = A.elem(**{"x*": 1, "(gx)*": 1})
    T = field.array(np.array([A.unit, G, X, A.mul(G, X)]).T)
    rebased = change_basis(A, T, HH4_NAMES)
    assert rebased.same_structure(sweedler_h4(field, HH4_NAMES))
    Ti = inverse(field, T)
    left = field.contract("hak,ai,jk->hij", mp.left.table, T, Ti)
    right = field.contract("hak,ai->hik", mp.right.table, T)
    target = canonical_pair(field, 1)
    assert field.equal(left, target.left.table)
    assert field.equal(right, target.right.table)


def test_double_of_group_algebra_is_a_tensor_product(field):
    from hopfcalc import tensor_product, twist, dual
    K = group_algebra_c2(field)
    mp = canonical_double_actions(K)
    from hopfcalc.matched_pair import trivial_left, trivial_right
    assert mp.left == trivial_left(K, mp.A)
    assert mp.right == trivial_right(K, mp.A)
    assert drinfeld_double(K) == tensor_product(twist(dual(K), False, True), K)


def test_double_is_unimodular_but_its_dual_is_not(field):
    from hopfcalc import dual, h16_lambda, integrals, is_semisimple
    D = drinfeld_double(sweedler_h4(field))
    assert integrals(D)[1]
    assert not is_semisimple(D)
    assert not integrals(dual(D))[1]
    # so H16(0), which is unimodular, cannot be the dual of the double
    assert integrals(h16_lambda(field, 0))[1]
