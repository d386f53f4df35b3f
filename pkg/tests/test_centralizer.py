import itertools
from fractions import Fraction

import pytest

from cheralg.centralizer import (M, antisymmetrize_shaped, b_kappa,
                                 central_omega, o_explicit, o_proj, o_subset,
                                 o_three_explicit, o_top, o_two_explicit,
                                 psi_kappa)
from cheralg.core import anticommutator as ac, supercommutator as sc
from cheralg.geometry import beta, bilinear_B
from cheralg.osp import build_osp
from cheralg.scalars import Scalar


def test_angular_momentum(ctx_a12):
    ctx = ctx_a12
    u, v = ctx.space.basis_covector(0), ctx.space.basis_covector(1)
    m = M(ctx, u, v)
    assert m == ctx.x(0) * ctx.y(1) - ctx.x(1) * ctx.y(0)
    assert M(ctx, u, u).is_zero()
    assert m.kappa_degree() == 0          # deformation terms cancel
    gens = build_osp(ctx)
    for t in (gens.H, gens.Ep, gens.Em):
        assert sc(t, m).is_zero()


def test_one_index_element(ctx_a12):
    ctx = ctx_a12
    u = ctx.space.basis_covector(0)
    assert o_proj(ctx, [u]) == ctx.o_frak(u)
    assert o_explicit(ctx, [u], "first") == ctx.o_frak(u)
    assert o_explicit(ctx, [u], "second") == ctx.o_frak(u)


def test_two_index_value(ctx_a12):
    ctx = ctx_a12
    u, v = ctx.space.basis_covector(0), ctx.space.basis_covector(1)
    s = ctx.g(ctx.group.reflections[0].elem)
    expect = (ctx.x(0) * ctx.y(1) - ctx.x(1) * ctx.y(0)
              + ctx.e(0) * ctx.e(1) * Fraction(1, 2)
              + ctx.scalar_elem(Scalar.kappa(0)) * s * ctx.e(0) * ctx.e(1))
    O12 = o_proj(ctx, [u, v])
    assert O12 == expect
    assert o_two_explicit(ctx, u, v) == expect
    # undeformed limit drops the reflection term
    assert O12.substitute_kappa([0]) == \
        (ctx.x(0) * ctx.y(1) - ctx.x(1) * ctx.y(0)
         + ctx.e(0) * ctx.e(1) * Fraction(1, 2)).substitute_kappa([0])


def test_skew_symmetry_and_repeats(ctx_a12):
    ctx = ctx_a12
    u, v = ctx.space.basis_covector(0), ctx.space.basis_covector(1)
    assert o_proj(ctx, [v, u]) == -o_proj(ctx, [u, v])
    assert o_proj(ctx, [u, u]).is_zero()
    assert o_proj(ctx, [u + v, u + v]).is_zero()


def test_index_count_bounds(ctx_a12):
    ctx = ctx_a12
    u = ctx.space.basis_covector(0)
    with pytest.raises(ValueError):
        o_proj(ctx, [])
    with pytest.raises(ValueError):
        o_proj(ctx, [u, u, u])              # three indices in dimension two
    with pytest.raises(ValueError):
        o_subset(ctx, [0, 0])
    with pytest.raises(ValueError):
        o_subset(ctx, [])


def test_route_agreement_nonorthogonal(ctx_a23):
    ctx = ctx_a23
    b = [ctx.space.basis_covector(p) for p in range(3)]
    covs = [b[0], b[1], b[0] + b[2]]
    ref = o_proj(ctx, covs)
    assert o_explicit(ctx, covs, "first") == ref
    assert o_explicit(ctx, covs, "second") == ref
    assert o_three_explicit(ctx, *covs) == ref
    with pytest.raises(ValueError):
        o_explicit(ctx, covs, "third")


def test_membership(ctx_a23):
    ctx = ctx_a23
    gens = build_osp(ctx)
    b = [ctx.space.basis_covector(p) for p in range(3)]
    for tup in ([b[0]], [b[0], b[2]], b):
        o = o_proj(ctx, tup)
        assert sc(gens.X, o).is_zero()
        assert sc(gens.D, o).is_zero()


def test_subset_conventions(ctx_a12):
    ctx = ctx_a12
    u, v = ctx.space.basis_covector(0), ctx.space.basis_covector(1)
    assert o_subset(ctx, [0, 1]) == o_proj(ctx, [u, v])
    assert o_subset(ctx, [1, 0]) == o_proj(ctx, [u, v])   # ascending order
    assert o_top(ctx) == o_subset(ctx, [0, 1])


def test_central_omega_d2(ctx_a12):
    ctx = ctx_a12
    Om = central_omega(ctx)
    O12 = o_subset(ctx, [0, 1])
    assert Om == O12 * O12                # the one-index sum has weight d-2=0
    rho = ctx.rho([0])
    assert (Om * rho - rho * Om).is_zero()
    assert (Om * O12 - O12 * Om).is_zero()


def test_psi_kappa_matches_commutator(ctx_b22):
    ctx = ctx_b22
    covs = [ctx.space.basis_covector(p) for p in range(2)]
    covs.append(covs[0] + covs[1])
    for u, v in itertools.product(covs, repeat=2):
        lhs = sc(ctx.from_vector(beta(u)), ctx.from_covector(v))
        assert lhs == ctx.scalar_elem(bilinear_B(u, v)) + psi_kappa(ctx, u, v)
        assert b_kappa(ctx, u, v) == b_kappa(ctx, v, u)


def test_square_formula_spot(ctx_a23):
    # the three-index square in terms of lower squares
    ctx = ctx_a23
    Oi = lambda *idx: o_subset(ctx, idx)
    lhs = Oi(0, 1, 2) ** 2
    rhs = (Oi(0) ** 2 + Oi(1) ** 2 + Oi(2) ** 2
           + Oi(0, 1) ** 2 + Oi(0, 2) ** 2 + Oi(1, 2) ** 2
           - ctx.scalar_elem(Fraction(1, 4)))
    assert (lhs - rhs).is_zero()


def test_corrected_triple_product_relation(env_a15):
    # The second post-corollary product relation is misprinted in its
    # source; the engine-verified form has a minus sign on the first
    # two-index bracket (and the one-index bracket vanishes identically).
    ctx = env_a15.ctx
    Oi = lambda *idx: o_subset(ctx, idx)
    j, k, l, m, n = range(5)
    lhs = ac(Oi(j, k, l), Oi(j, m, n))
    assert ac(Oi(j), Oi(j, k, l, m, n)).is_zero()
    rhs = -ac(Oi(j, k), Oi(j, l, m, n)) + ac(Oi(j, l), Oi(j, k, m, n))
    assert (lhs - rhs).is_zero()
    # and the printed sign pattern does not hold
    wrong = ac(Oi(j, k), Oi(j, l, m, n)) + ac(Oi(j, l), Oi(j, k, m, n))
    assert not (lhs - wrong).is_zero()


def test_shaped_antisymmetrization(ctx_a23):
    ctx = ctx_a23
    b = [ctx.space.basis_covector(p) for p in range(3)]
    one = lambda a: o_proj(ctx, [a])
    two = lambda a, c: o_proj(ctx, [a, c])
    r = (antisymmetrize_shaped(ctx, b, [(one, 1), (two, 2)]) * (-4)
         + antisymmetrize_shaped(ctx, b, [(two, 2), (one, 1)]) * 4)
    assert r.is_zero()
    with pytest.raises(ValueError):
        antisymmetrize_shaped(ctx, b, [(one, 1)])
