import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcalc import Field, dual, group_likes, h16_lambda, integrals, is_semisimple, skew_primitives
from hopfcalc.presets import group_algebra_c2, h4_tensor_h4, sweedler_h4, trivial_algebra
from hopfcalc.probe import (ProbeError, coalgebra_maps, group_likes_exhaustive, is_group_like,
                            pointed_decomposition)


def fmt(H, vectors):
    return [H.format(v) for v in vectors]


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("make", [sweedler_h4, group_algebra_c2, lambda F: dual(sweedler_h4(F))],
                         ids=["h4", "kc2", "dual_h4"])
def test_group_likes_agree_with_exhaustive_scan(p, make):
    H = make(Field(p))
    fast = fmt(H, group_likes(H))
    slow = fmt(H, group_likes_exhaustive(H))
    assert fast == slow


def test_group_likes_of_h4(small_prime_field):
    H = sweedler_h4(small_prime_field)
    assert fmt(H, group_likes(H)) == ["1", "g"]


def test_group_likes_of_sixteen_dimensional(small_prime_field):
    F = small_prime_field
    assert fmt(h16_lambda(F, 1), group_likes(h16_lambda(F, 1))) == ["1", "g", "G", "Gg"]
    T = h4_tensor_h4(F)
    assert len(group_likes(T)) == 4


def test_group_likes_over_q_need_candidates():
    F = Field(0)
    H = sweedler_h4(F)
    with pytest.raises(ProbeError):
        group_likes(H)
    cands = [H.e("1"), H.e("g"), H.e("x"), H.elem(one=1, g=1)]
    assert fmt(H, group_likes(H, cands)) == ["1", "g"]


def test_exhaustive_scan_limit():
    with pytest.raises(ProbeError):
        group_likes_exhaustive(h16_lambda(Field(7), 1))


def test_skew_primitives_of_h4(field):
    H = sweedler_h4(field)
    one, g = H.e("1"), H.e("g")
    p1g = skew_primitives(H, one, g)
    pg1 = skew_primitives(H, g, one)
    assert p1g.dim == 2 and pg1.dim == 2
    assert H.e("x") in p1g and H.elem(one=1, g=-1) in p1g
    assert H.e("gx") in pg1 and H.elem(one=1, g=-1) in pg1
    assert H.e("x") not in pg1
    assert skew_primitives(H, one, one).dim == 0
    assert skew_primitives(H, g, g).dim == 0


def test_skew_primitive_anchors_must_be_group_like(field):
    H = sweedler_h4(field)
    with pytest.raises(ProbeError):
        skew_primitives(H, H.e("x"), H.e("1"))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_products_of_skew_primitives_with_group_likes(p, data):
    # g P_{a,b} lands in P_{ga,gb}; checked on random members of the space
    F = Field(p)
    H = h16_lambda(F, data.draw(st.integers(0, p - 1)))
    G = group_likes(H)
    a, b, c = (G[data.draw(st.integers(0, 3))] for _ in range(3))
    space = skew_primitives(H, a, b)
    if space.dim == 0:
        return
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=space.dim, max_size=space.dim))
    v = F.reduce(np.asarray(coeffs, dtype=np.int64) @ space.basis)
    target = skew_primitives(H, H.mul(c, a), H.mul(c, b))
    assert H.mul(c, v) in target


def test_integrals_of_h4(field):
    H = sweedler_h4(field)
    left, uni = integrals(H, "left")
    right, _ = integrals(H, "right")
    assert not uni
    assert left.format() == ["x + gx"]
    assert right.format() == ["x - gx"]
    assert not is_semisimple(H)


def test_integrals_of_group_algebra(field):
    K = group_algebra_c2(field)
    left, uni = integrals(K)
    assert uni and left.format() == ["1 + g"]
    assert is_semisimple(K)
    assert is_semisimple(trivial_algebra(field))


@pytest.mark.parametrize("lam", [0, 1, 2])
def test_h16_is_unimodular(small_prime_field, lam):
    F = small_prime_field
    H = h16_lambda(F, lam)
    left, uni = integrals(H)
    assert uni and left.dim == 1
    t = H.mul(H.elem(X=1, GX=1), H.elem(x=1, gx=-1))
    assert t in left
    assert H.eps(t) == 0


def test_is_group_like():
    F = Field(3)
    H = sweedler_h4(F)
    assert is_group_like(H, H.e("g"))
    assert not is_group_like(H, H.elem(one=1, x=1))


def test_pointed_decomposition_of_h4(small_prime_field):
    H = sweedler_h4(small_prime_field)
    glikes, items = pointed_decomposition(H)
    assert len(glikes) == 2 and len(items) == 4


def brute_force_coalgebra_maps(H):
    """Every 4x4 matrix with f(1) = 1 checked against the coalgebra-map equations."""
    F = H.field
    p = F.p
    D = H.comult.astype(np.int64)
    eps = H.counit.astype(np.int64)
    found = []
    cols = np.array(list(itertools.product(range(p), repeat=4)), dtype=np.int64)  # one column
    for c1, c2 in itertools.product(cols, repeat=2):
        M = np.zeros((len(cols), 4, 4), dtype=np.int64)
        M[:, :, 0] = [1, 0, 0, 0]
        M[:, :, 1] = c1
        M[:, :, 2] = c2
        M[:, :, 3] = cols
        lhs = np.einsum("nji,jab->niab", M, D) % p
        rhs = np.einsum("icd,nac,nbd->niab", D, M, M) % p
        ceps = np.einsum("nji,j->ni", M, eps) % p
        ok = np.all((lhs == rhs).reshape(len(cols), -1), axis=1) & np.all(ceps == eps, axis=1)
        found.extend(M[ok])
    return found


def test_coalgebra_maps_match_brute_force_over_f3():
    H = sweedler_h4(Field(3))
    slow = brute_force_coalgebra_maps(H)
    fast = coalgebra_maps(H, H)
    assert len(slow) == len(fast) == 82
    key = lambda m: tuple(np.asarray(m, dtype=np.int64).reshape(-1).tolist())
    assert sorted(map(key, slow)) == sorted(map(key, fast))


def test_coalgebra_map_count_over_f5():
    H = sweedler_h4(Field(5))
    assert len(coalgebra_maps(H, H)) == 1 + 5**4


@pytest.mark.parametrize("name", ["h4", "kc2", "h4xh4", "h16:1", "double"])
def test_group_likes_form_a_group(small_prime_field, name):
    from hopfcalc.presets import by_name
    F = small_prime_field
    H = by_name(name, F)
    G = group_likes(H)
    keys = {tuple(int(c) for c in g) for g in G}
    for a in G:
        assert is_group_like(H, H.S(a))
        assert F.equal(H.mul(a, H.S(a)), H.unit)
        for b in G:
            assert tuple(int(c) for c in H.mul(a, b)) in keys


@pytest.mark.parametrize("name", ["h4", "kc2", "k", "h4xh4", "h16:1", "double"])
def test_integral_spaces_are_lines_that_absorb(field, name):
    from hopfcalc.presets import by_name
    H = by_name(name, field)
    for side in ("left", "right"):
        space, _ = integrals(H, side)
        assert space.dim == 1
        t = space.basis[0]
        for i in range(H.dim):
            h = H.e(i)
            prod = H.mul(h, t) if side == "left" else H.mul(t, h)
            assert field.equal(prod, field.reduce(H.eps(h) * t))
    one = H.unit
    assert skew_primitives(H, one, one).dim == 0


@pytest.mark.parametrize("lam", [0, 1, 3])
def test_actions_preserve_skew_primitive_structure(field, lam):
    # a group-like acting on a skew-primitive gives a skew-primitive whose
    # anchors are the acted-on anchors
    from hopfcalc import canonical_pair
    mp = canonical_pair(field, lam)
    A, H = mp.A, mp.H
    cases = [(H, A, mp.left, lambda g, v: mp.left(g, v)),
             (A, H, mp.right, lambda g, v: mp.right(v, g))]
    for acting, module, _, act in cases:
        glikes_acting = [acting.e(0), acting.e(1)]
        glikes_module = [module.e(0), module.e(1)]
        for g in glikes_acting:
            for a in glikes_module:
                assert is_group_like(module, act(g, a))
            for a1 in glikes_module:
                for a2 in glikes_module:
                    for v in skew_primitives(module, a1, a2).vectors():
                        image = act(g, v)
                        target = skew_primitives(module, act(g, a1), act(g, a2))
                        assert image in target
