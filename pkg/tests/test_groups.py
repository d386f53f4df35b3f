import random
from fractions import Fraction

import pytest

from cheralg.geometry import bilinear_B, pairing, beta
from cheralg.groups import (build_group, from_generators, parse_group_spec,
                            trivial_group)


def test_orders_and_reflection_counts():
    a1 = build_group("A", 1, 2)
    assert a1.order == 2 and len(a1.reflections) == 1 and a1.num_classes == 1
    a2 = build_group("A", 2, 3)
    assert a2.order == 6 and len(a2.reflections) == 3 and a2.num_classes == 1
    b2 = build_group("B", 2, 2)
    assert b2.order == 8 and len(b2.reflections) == 4 and b2.num_classes == 2
    b3 = build_group("B", 3, 3)
    assert b3.order == 48 and len(b3.reflections) == 9 and b3.num_classes == 2
    d3 = build_group("D", 3, 3)
    assert d3.order == 24 and len(d3.reflections) == 6


def test_a1_root_data():
    g = build_group("A", 1, 2)
    r = g.reflections[0]
    assert r.root == (Fraction(1), Fraction(-1))
    assert r.coroot == (Fraction(1), Fraction(-1))
    assert r.root_norm == 2


def test_b2_roots_and_classes():
    g = build_group("B", 2, 2)
    roots = {r.root for r in g.reflections}
    assert roots == {(1, 0), (0, 1), (1, -1), (1, 1)}
    short = {r.class_id for r in g.reflections if r.root_norm == 1}
    long = {r.class_id for r in g.reflections if r.root_norm == 2}
    assert len(short) == 1 and len(long) == 1 and short != long


def test_reflections_are_involutions_with_correct_action():
    g = build_group("B", 2, 2)
    sp = g.space
    for r in g.reflections:
        assert g.mul(r.elem, r.elem) == 0
        alpha = sp.covector(r.root)
        assert g.act(r.elem, alpha) == -alpha
        # s(u) = u - alpha <coroot, u> on every basis covector
        coroot = sp.vector(r.coroot)
        for p in range(g.dim):
            u = sp.basis_covector(p)
            expect = u - alpha * pairing(coroot, u)
            assert g.act(r.elem, u) == expect


def test_conjugate_reflections_share_class():
    g = build_group("B", 2, 2)
    for r in g.reflections:
        for h in range(g.order):
            conj = g.mul(g.mul(h, r.elem), g.inv(h))
            assert g.reflection_by_elem[conj].class_id == r.class_id


def test_gram_preservation_random():
    g = build_group("A", 2, 3)
    rng = random.Random(5)
    sp = g.space
    for _ in range(25):
        u = sp.covector([rng.randint(-3, 3) for _ in range(3)])
        v = sp.covector([rng.randint(-3, 3) for _ in range(3)])
        h = rng.randrange(g.order)
        assert bilinear_B(g.act(h, u), g.act(h, v)) == bilinear_B(u, v)
        # pairing with the contragredient action is invariant too
        w = sp.vector([rng.randint(-3, 3) for _ in range(3)])
        assert pairing(g.act(h, u), g.act(h, w)) == pairing(u, w)


def test_ambient_embedding_fixes_extra_coordinates():
    g = build_group("A", 1, 6)
    assert g.dim == 6 and g.order == 2
    s = g.reflections[0]
    sp = g.space
    for p in range(2, 6):
        assert g.act(s.elem, sp.basis_covector(p)) == sp.basis_covector(p)


def test_group_spec_parsing():
    assert parse_group_spec("A1@2").label == "A1@2"
    assert parse_group_spec("B2@2").order == 8
    with pytest.raises(ValueError):
        parse_group_spec("Z2@2")
    with pytest.raises(ValueError):
        parse_group_spec("A1")
    with pytest.raises(ValueError):
        build_group("A", 2, 2)        # ambient too small
    with pytest.raises(ValueError):
        build_group("A", 7, 8, order_cap=10_000)     # 8! over the cap


def test_custom_group_closure():
    # sign flip in coordinate 1: the rank-one family-B group
    g = from_generators([[[-1, 0], [0, 1]]])
    assert g.order == 2
    assert len(g.reflections) == 1
    assert g.reflections[0].root == (Fraction(1), Fraction(0))
    assert g.reflections[0].root_norm == 1


def test_custom_group_cap():
    mats = build_group("A", 2, 3).mats
    with pytest.raises(ValueError):
        from_generators(list(mats[1:3]), closure_cap=3)


def test_custom_group_must_preserve_form():
    with pytest.raises(ValueError):
        from_generators([[[2, 0], [0, 1]]])


def test_trivial_group():
    g = trivial_group(3)
    assert g.order == 1 and g.num_classes == 0 and not g.reflections


def test_multiplication_closure_and_inverses():
    g = build_group("A", 2, 3)
    for i in range(g.order):
        assert g.mul(i, g.inv(i)) == 0
        for j in range(g.order):
            k = g.mul(i, j)
            assert 0 <= k < g.order
    # composition convention: (gh).u = g.(h.u)
    sp = g.space
    u = sp.covector([1, 2, 3])
    for i in range(g.order):
        for j in range(g.order):
            assert g.act(g.mul(i, j), u) == g.act(i, g.act(j, u))
