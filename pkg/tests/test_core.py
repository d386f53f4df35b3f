import random
from fractions import Fraction

import pytest

from cheralg.core import (Context, anticommutator, antisymmetrize,
                          commutator, random_element, supercommutator)
from cheralg.geometry import beta, bilinear_B
from cheralg.groups import build_group, trivial_group
from cheralg.scalars import BN_I, Scalar, as_scalar


def k(c=0, e=1):
    return Scalar.kappa(c, e)


def test_deformed_commutation(ctx_a12):
    ctx = ctx_a12
    s = ctx.g(ctx.group.reflections[0].elem)
    assert ctx.y(0) * ctx.x(0) == ctx.x(0) * ctx.y(0) + 1 + ctx.scalar_elem(k()) * s
    assert ctx.y(0) * ctx.x(1) == ctx.x(1) * ctx.y(0) - ctx.scalar_elem(k()) * s
    assert str(supercommutator(ctx.y(0), ctx.x(0))) == "1 + k1*s1"


def test_clifford_relations(ctx_a12):
    ctx = ctx_a12
    e1, e2 = ctx.e(0), ctx.e(1)
    assert e2 * e1 == -(e1 * e2)
    assert e1 * e1 == ctx.one()
    assert supercommutator(e1, e1) == ctx.scalar_elem(2)


def test_group_slides_right(ctx_a12):
    ctx = ctx_a12
    s = ctx.g(ctx.group.reflections[0].elem)
    assert s * ctx.x(0) == ctx.x(1) * s
    assert s * ctx.y(1) == ctx.y(0) * s
    assert s * ctx.e(0) == ctx.e(0) * s          # group commutes with Clifford
    assert s * s == ctx.one()


def test_group_action_on_monomials(ctx_a12):
    ctx = ctx_a12
    s = ctx.g(ctx.group.reflections[0].elem)
    lhs = s * (ctx.x(0) * ctx.x(0) * ctx.x(1))
    assert lhs == ctx.x(1) * ctx.x(1) * ctx.x(0) * s


def test_vectors_commute(ctx_a23):
    ctx = ctx_a23
    assert commutator(ctx.y(0), ctx.y(1)).is_zero()
    assert commutator(ctx.x(0), ctx.x(2)).is_zero()


def test_weyl_limit_is_undeformed():
    ctx = Context(trivial_group(2))
    assert supercommutator(ctx.y(0), ctx.x(0)) == ctx.one()
    assert supercommutator(ctx.y(0), ctx.x(1)).is_zero()


def test_mixed_parity_brackets(ctx_a12):
    ctx = ctx_a12
    rng = random.Random(12)
    for _ in range(15):
        a = random_element(ctx, rng)
        b = random_element(ctx, rng)
        split = (a.even_part() * b.even_part() - b.even_part() * a.even_part()
                 + a.even_part() * b.odd_part() - b.odd_part() * a.even_part()
                 + a.odd_part() * b.even_part() - b.even_part() * a.odd_part()
                 + a.odd_part() * b.odd_part() + b.odd_part() * a.odd_part())
        assert supercommutator(a, b) == split


def test_associativity_seeded():
    for spec in (("A", 1, 2), ("B", 2, 2)):
        ctx = Context(build_group(*spec))
        rng = random.Random(7)
        for _ in range(30):
            a = random_element(ctx, rng)
            b = random_element(ctx, rng)
            c = random_element(ctx, rng)
            assert (a * b) * c == a * (b * c)


def test_antisymmetrize_examples(ctx_a12):
    ctx = ctx_a12
    u1, u2 = ctx.space.basis_covector(0), ctx.space.basis_covector(1)
    assert antisymmetrize(ctx, [u1, u1]).is_zero()
    assert antisymmetrize(ctx, [u1, u2]) == ctx.e(0) * ctx.e(1)
    v = ctx.covector([1, 1])
    lhs = antisymmetrize(ctx, [u1, v])
    assert lhs == ctx.gamma(u1) * ctx.gamma(v) - bilinear_B(u1, v)
    assert antisymmetrize(ctx, []) == ctx.one()


def test_antisymmetrize_beyond_dimension(ctx_a12):
    # three covectors in dimension two are dependent: honest zero
    ctx = ctx_a12
    u1, u2 = ctx.space.basis_covector(0), ctx.space.basis_covector(1)
    assert antisymmetrize(ctx, [u1, u2, u1 + u2]).is_zero()


def test_antisymmetrize_triple_recursion(ctx_a23):
    # against the closed expansion with pairwise forms
    ctx = ctx_a23
    u = ctx.covector([1, 1, 0])
    v = ctx.covector([0, 1, -1])
    w = ctx.covector([2, 0, 1])
    gu, gv, gw = (ctx.gamma(c) for c in (u, v, w))
    B = bilinear_B
    expect = (gu * gv * gw - gw * B(u, v) + gv * B(u, w) - gu * B(v, w))
    assert antisymmetrize(ctx, [u, v, w]) == expect


def test_rho_and_chirality(ctx_a12):
    ctx = ctx_a12
    rho = ctx.rho([0])
    s = ctx.g(ctx.group.reflections[0].elem)
    from cheralg.scalars import BN_HALF_SQRT2
    alpha = ctx.covector([1, -1])
    assert rho == s * ctx.gamma(alpha) * BN_HALF_SQRT2
    assert rho * rho == ctx.one()
    G = ctx.chirality()
    assert G == ctx.e(0) * ctx.e(1) * BN_I
    assert G * G == ctx.one()
    for p in range(2):
        assert G * ctx.e(p) == -(ctx.e(p) * G)


def test_rho_rejects_bad_root_lengths():
    from cheralg.groups import from_generators
    # reflection through (2,1): root norm 5
    g = from_generators([[[Fraction(-3, 5), Fraction(-4, 5)],
                          [Fraction(-4, 5), Fraction(3, 5)]]])
    ctx = Context(g)
    with pytest.raises(ValueError):
        ctx.rho([0])


def test_reflection_sum_element(ctx_a12):
    ctx = ctx_a12
    s = ctx.g(ctx.group.reflections[0].elem)
    o1 = ctx.o_frak(ctx.space.basis_covector(0))
    assert o1 == ctx.scalar_elem(k() * Fraction(1, 2)) * s * (ctx.e(0) - ctx.e(1))
    assert ctx.o_frak(ctx.covector([1, 1])).is_zero()
    assert o1.substitute_kappa([0]).is_zero()
    assert ctx.omega_kappa() == ctx.scalar_elem(k()) * s


def test_power_and_division(ctx_a12):
    ctx = ctx_a12
    x = ctx.x(0)
    assert x ** 3 == x * x * x
    assert x ** 0 == ctx.one()
    assert (x * 2) / 2 == x
    with pytest.raises(ValueError):
        x ** -1


def test_rendering_deterministic(ctx_a12):
    ctx = ctx_a12
    e = ctx.x(0) * ctx.y(0) + ctx.one() + ctx.scalar_elem(k()) * \
        ctx.g(ctx.group.reflections[0].elem)
    assert str(e) == "x1*y1 + 1 + k1*s1"
    assert e.witness() == "x1*y1"
    assert str(ctx.zero()) == "0"


def test_substitute_kappa(ctx_b22):
    ctx = ctx_b22
    resid = supercommutator(ctx.y(0), ctx.x(0))
    for vals in ([Fraction(1), Fraction(-1, 2)], [BN_I, Fraction(2)]):
        sub = resid.substitute_kappa(vals)
        assert sub.kappa_degree() == 0
    with pytest.raises(KeyError):
        resid.substitute_kappa([1])


def test_context_mismatch():
    c1 = Context(build_group("A", 1, 2))
    c2 = Context(build_group("A", 1, 2))
    with pytest.raises(ValueError):
        c1.x(0) * c2.x(0)
