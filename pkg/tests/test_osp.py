import itertools
from fractions import Fraction

import pytest

from cheralg.core import Context, supercommutator as sc
from cheralg.geometry import beta
from cheralg.groups import build_group, trivial_group
from cheralg.osp import (GAMMA, NotWeightZero, XMINUS, XPLUS, build_osp,
                         casimir, gen_symmetry, osp_relation_residuals,
                         pair_element, p_alpha, p_minus, p_plus, q_minus,
                         q_plus, scasimir, b_form, _PARITY)
from cheralg.scalars import Scalar


def test_relations_hold_in_all_small_groups(env_a12, env_b22, env_a23):
    for env in (env_a12, env_b22, env_a23):
        gens = build_osp(env.ctx)          # raises on any failure
        for name, resid in osp_relation_residuals(gens).items():
            assert resid.is_zero(), name


def test_relations_hold_with_general_gram():
    ctx = Context(trivial_group(2, gram=[[1, 1], [1, 3]]))
    build_osp(ctx)


def test_explicit_h(ctx_a12):
    ctx = ctx_a12
    gens = build_osp(ctx)
    s = ctx.g(ctx.group.reflections[0].elem)
    expect = (ctx.x(0) * ctx.y(0) + ctx.x(1) * ctx.y(1) + ctx.one()
              + ctx.scalar_elem(Scalar.kappa(0)) * s)
    assert gens.H == expect
    assert gens.X == ctx.x(0) * ctx.e(0) + ctx.x(1) * ctx.e(1)
    assert gens.Ep.substitute_kappa([0]) == \
        (ctx.x(0) ** 2 + ctx.x(1) ** 2) * Fraction(1, 2)


def test_sqrt2_normalization(ctx_a12):
    gens = build_osp(ctx_a12)
    assert gens.Fp * gens.Fp == gens.Ep          # [F+,F+] = 2E+
    assert sc(gens.Fp, gens.Fm) == gens.H


def test_pair_element_examples(ctx_a12):
    ctx = ctx_a12
    gens = build_osp(ctx)
    assert pair_element(ctx, XPLUS, XMINUS) == gens.H
    assert pair_element(ctx, XPLUS, GAMMA) == gens.X
    assert pair_element(ctx, XPLUS, XPLUS) == gens.Ep * 2
    assert pair_element(ctx, XMINUS, XMINUS) == -(gens.Em * 2)
    # the supersymmetric pairing of the odd direction with itself vanishes
    assert pair_element(ctx, GAMMA, GAMMA).is_zero()
    # bilinearity over combos
    combo = pair_element(ctx, {XPLUS: 2, XMINUS: 1}, GAMMA)
    assert combo == gens.X * 2 + gens.D


def test_projector_examples(ctx_a12):
    ctx = ctx_a12
    s = ctx.g(ctx.group.reflections[0].elem)
    kk = ctx.scalar_elem(Scalar.kappa(0))
    assert p_plus(ctx, ctx.one()) == ctx.one()
    assert p_plus(ctx, ctx.e(0)) == -(kk * s * (ctx.e(0) - ctx.e(1)))
    assert p_plus(ctx, ctx.e(0)) == ctx.o_frak(ctx.covector([1, 0])) * (-2)
    assert p_plus(ctx, s) == kk * (-2)
    assert p_minus(ctx, ctx.e(0)) == p_plus(ctx, ctx.e(0))


def test_projector_difference_is_h_bracket(ctx_a12):
    # P- minus P+ acts as the bracket with H
    ctx = ctx_a12
    gens = build_osp(ctx)
    for a in (ctx.x(0), ctx.e(0) * ctx.x(1), ctx.g(1) * ctx.y(0)):
        assert p_minus(ctx, a) - p_plus(ctx, a) == sc(gens.H, a)


def test_scasimir_laws(ctx_b22):
    ctx = ctx_b22
    gens = build_osp(ctx)
    S = scasimir(ctx)
    Om = casimir(ctx)
    assert (S * S - Om - Fraction(1, 4)).is_zero()
    assert (S * gens.X + gens.X * S).is_zero()
    assert (S * gens.Ep - gens.Ep * S).is_zero()
    assert sc(Om, gens.D).is_zero()
    assert (p_plus(ctx, S) - S * S * 2).is_zero()
    assert (p_minus(ctx, S) - Om * 2 - Fraction(1, 2)).is_zero()


def test_series_projector(ctx_a12):
    ctx = ctx_a12
    gens = build_osp(ctx)
    from cheralg.centralizer import M
    m = M(ctx, ctx.space.basis_covector(0), ctx.space.basis_covector(1))
    assert p_alpha(ctx, ctx.one()) == ctx.one()
    assert p_alpha(ctx, m) == m
    a = ctx.x(0) * ctx.y(0) - ctx.x(1) * ctx.y(1)
    pa = p_alpha(ctx, a)
    assert sc(gens.Ep, pa).is_zero()
    assert sc(gens.Em, pa).is_zero()
    with pytest.raises(NotWeightZero):
        p_alpha(ctx, ctx.x(0))


def test_series_projector_bound(ctx_a12):
    from cheralg.osp import NilpotenceBoundExceeded
    ctx = ctx_a12
    a = ctx.x(0) * ctx.y(0) - ctx.x(1) * ctx.y(1)
    with pytest.raises(NilpotenceBoundExceeded):
        p_alpha(ctx, a, bound=0)


def test_generalized_symmetry(env_a12, env_a23):
    for env in (env_a12, env_a23):
        ctx = env.ctx
        gens = build_osp(ctx)
        covs = [env.x(0), env.x(1), env.x(0) + env.x(1)]
        for u in covs:
            R = gen_symmetry(ctx, u)
            gu = ctx.gamma(u)
            assert R == q_minus(ctx, gu)
            assert (gens.D * R + (R + gu) * gens.D).is_zero()
            Qp = q_plus(ctx, gu)
            assert (gens.X * Qp + (Qp - gu) * gens.X).is_zero()


def test_q_plus_on_one(ctx_a12):
    ctx = ctx_a12
    assert q_plus(ctx, ctx.one()) == build_osp(ctx).H + 1


def test_structure_constants(ctx_a12):
    ctx = ctx_a12
    syms = (XPLUS, XMINUS, GAMMA)

    def combo(pairs):
        out = {}
        for s_, c in pairs:
            out[s_] = out.get(s_, 0) + c
        return out

    for z1, z2, z3, z4 in itertools.product(syms, repeat=4):
        lhs = sc(pair_element(ctx, z1, z2), pair_element(ctx, z3, z4))
        s23 = -1 if (_PARITY[z2] and _PARITY[z3]) else 1
        s24 = -1 if (_PARITY[z2] and _PARITY[z4]) else 1
        w1 = combo([(z1, b_form(z2, z3)), (z2, b_form(z1, z3) * s23)])
        w2 = combo([(z1, b_form(z2, z4)), (z2, b_form(z1, z4) * s24)])
        s123 = -1 if ((_PARITY[z1] ^ _PARITY[z2]) and _PARITY[z3]) else 1
        rhs = pair_element(ctx, w1, z4) + pair_element(ctx, z3, w2) * s123
        assert (lhs - rhs).is_zero(), (z1, z2, z3, z4)


def test_adjoint_action_laws(ctx_a23):
    ctx = ctx_a23
    u = ctx.covector([1, 0, 2])
    ue = ctx.from_covector(u)
    ve = ctx.from_vector(beta(u))
    mm = pair_element(ctx, XMINUS, XMINUS)
    pp = pair_element(ctx, XPLUS, XPLUS)
    pm = pair_element(ctx, XPLUS, XMINUS)
    assert sc(mm, ue) == ve * 2
    assert sc(pp, ve) == -(ue * 2)
    assert sc(pm, ue) == ue
    assert sc(pm, ve) == -ve
