"""The rank-one orthosymplectic realization inside the engine's algebra.

The five generators arise from supersymmetrized pairings of a three-element
auxiliary superspace (two even directions, one odd) against the bilinear
form.  In the distinguished coordinates:

    X  = sum_p x_p e_p          (odd raising partner, sqrt2 * F+)
    D  = sum_p y_p e_p          (odd lowering partner, sqrt2 * F-)
    H  = sum_p x_p y_p + d/2 + Omega_kappa
    E+ = (1/2) sum x_p^2        E- = -(1/2) sum y_p^2

with the general-Gram forms used when the Gram matrix is not the identity.
All defining relations are checked exactly at build time.

The extremal projectors P+/P- and the series projector for the even
subalgebra act through the adjoint action.  Everything here is phrased in
the rationalized generators X and D, so symbolic computations stay inside
the Gaussian-rational subring; the normalized odd generators with their
sqrt2 scalars are exposed alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Context, Element, supercommutator
from .geometry import Covector, beta
from .scalars import BN_HALF_SQRT2, Scalar, as_base, as_scalar

XPLUS = "x+"
XMINUS = "x-"
GAMMA = "gamma"
_PARITY = {XPLUS: 0, XMINUS: 0, GAMMA: 1}


def b_form(w: str, z: str):
    """The invariant form on the auxiliary superspace."""
    if (w, z) == (XMINUS, XPLUS):
        return Fraction(1)
    if (w, z) == (XPLUS, XMINUS):
        return Fraction(-1)
    if (w, z) == (GAMMA, GAMMA):
        return Fraction(2)
    return Fraction(0)


def omega_form(w: str, z: str):
    """The even restriction of the form; zero against the odd direction."""
    if GAMMA in (w, z):
        return Fraction(0)
    return b_form(w, z)


def _slot_element(ctx: Context, p: int, sym: str) -> Element:
    if sym == XPLUS:
        return ctx.x(p)
    if sym == XMINUS:
        return ctx.from_vector(beta(ctx.space.basis_covector(p)))
    if sym == GAMMA:
        return ctx.e(p)
    raise ValueError(f"unknown auxiliary basis symbol {sym!r}")


def pair_element(ctx: Context, w, z) -> Element:
    """The supersymmetrized pairing of two auxiliary directions with B.

    ``w`` and ``z`` are basis symbols ("x+", "x-", "gamma") or mappings
    symbol -> coefficient; the result is bilinear in both slots.
    """
    if isinstance(w, str):
        w = {w: 1}
    if isinstance(z, str):
        z = {z: 1}
    acc = ctx.zero()
    for ws, wc in w.items():
        for zs, zc in z.items():
            term = _pair_basis(ctx, ws, zs) * (as_scalar(wc) * as_scalar(zc))
            acc = acc + term
    return acc


def _pair_basis(ctx: Context, w: str, z: str) -> Element:
    key = ("pair", w, z)
    hit = ctx._misc_cache.get(key)
    if hit is not None:
        return hit
    d = ctx.dim
    bv = ctx.space.inv_gram
    acc = ctx.zero()
    for p in range(d):
        wp = _slot_element(ctx, p, w)
        for q in range(d):
            if bv[p][q].is_zero():
                continue
            acc = acc + wp * _slot_element(ctx, q, z) * bv[p][q]
    bwz = b_form(w, z)
    if bwz:
        acc = acc - ctx.scalar_elem(Fraction(bwz * d, 2))
    owz = omega_form(w, z)
    if owz:
        acc = acc - ctx.omega_kappa() * owz
    ctx._misc_cache[key] = acc
    return acc


@dataclass(frozen=True)
class OspGenerators:
    ctx: Context
    X: Element
    D: Element
    H: Element
    Ep: Element
    Em: Element
    Fp: Element
    Fm: Element
    OmegaKappa: Element


class RelationError(ArithmeticError):
    """A defining relation failed to reduce to zero: an engine bug."""


def build_osp(ctx: Context) -> OspGenerators:
    hit = ctx._misc_cache.get("osp")
    if hit is not None:
        return hit
    X = pair_element(ctx, XPLUS, GAMMA)
    D = pair_element(ctx, XMINUS, GAMMA)
    H = pair_element(ctx, XPLUS, XMINUS)
    Ep = pair_element(ctx, XPLUS, XPLUS) * Fraction(1, 2)
    Em = -(pair_element(ctx, XMINUS, XMINUS) * Fraction(1, 2))
    gens = OspGenerators(
        ctx=ctx, X=X, D=D, H=H, Ep=Ep, Em=Em,
        Fp=X * BN_HALF_SQRT2, Fm=D * BN_HALF_SQRT2,
        OmegaKappa=ctx.omega_kappa())
    for name, resid in osp_relation_residuals(gens).items():
        if not resid.is_zero():
            raise RelationError(f"defining relation {name} failed: {resid}")
    ctx._misc_cache["osp"] = gens
    return gens


def osp_relation_residuals(gens: OspGenerators) -> dict:
    """Residuals of the defining relations with nonzero right-hand side,
    rationalized by clearing the sqrt2 normalization."""
    X, D, H, Ep, Em = gens.X, gens.D, gens.H, gens.Ep, gens.Em
    sc = supercommutator
    return {
        "FpFm": sc(X, D) - H * 2,
        "HFpm": (sc(H, X) - X) + (sc(H, D) + D),
        "FpmFpm": (sc(X, X) - Ep * 4) + (sc(D, D) + Em * 4),
        "EpEm": sc(Ep, Em) - H,
        "HEpm": (sc(H, Ep) - Ep * 2) + (sc(H, Em) + Em * 2),
        "FpmEmp": (sc(X, Em) - D) + (sc(D, Ep) - X),
    }


# -- extremal projectors --------------------------------------------------------


def p_plus(ctx: Context, a: Element) -> Element:
    gens = build_osp(ctx)
    return a - supercommutator(gens.D, supercommutator(gens.X, a)) * Fraction(1, 2)


def p_minus(ctx: Context, a: Element) -> Element:
    gens = build_osp(ctx)
    return a + supercommutator(gens.X, supercommutator(gens.D, a)) * Fraction(1, 2)


def p_pm(ctx: Context, a: Element, sign: int = 1) -> Element:
    return p_plus(ctx, a) if sign > 0 else p_minus(ctx, a)


class NotWeightZero(ValueError):
    """The series projector only applies to elements commuting with H."""


class NilpotenceBoundExceeded(ArithmeticError):
    pass


def p_alpha(ctx: Context, a: Element, bound: int | None = None) -> Element:
    """Series projector for the even subalgebra, applied through the adjoint
    action; terminates when the raising operator annihilates, errors past
    the weight-theoretic bound."""
    gens = build_osp(ctx)
    if not supercommutator(gens.H, a).is_zero():
        raise NotWeightZero("argument does not commute with H")
    if bound is None:
        bound = 2 * a.degree() + 4
    acc = a
    up = a
    k = 0
    fact = 1          # k! * (k+1)!
    while True:
        up = supercommutator(gens.Ep, up)
        if up.is_zero():
            break
        k += 1
        if k > bound:
            raise NilpotenceBoundExceeded(
                f"raising operator not nilpotent within {bound} steps")
        fact = fact * k * (k + 1)
        term = up
        for _ in range(k):
            term = supercommutator(gens.Em, term)
        coef = Fraction((-1) ** k, fact)
        acc = acc + term * coef
    return acc


# -- generalized symmetries -----------------------------------------------------


def q_plus(ctx: Context, a: Element) -> Element:
    """(H+1)a - F-[F+, a]; for a annihilated by ad E+ this produces a
    generalized symmetry of the raising partner: X Q+(a) = -(Q+(a) - a) X."""
    gens = build_osp(ctx)
    return ((gens.H + 1) * a
            - gens.D * supercommutator(gens.X, a) * Fraction(1, 2))


def q_minus(ctx: Context, a: Element) -> Element:
    """(H-1)a - F+[F-, a]; for a annihilated by ad E- this produces a
    generalized symmetry of the lowering partner: D Q-(a) = -(Q-(a) + a) D."""
    gens = build_osp(ctx)
    return ((gens.H - 1) * a
            - gens.X * supercommutator(gens.D, a) * Fraction(1, 2))


def gen_symmetry(ctx: Context, u: Covector) -> Element:
    """(H - 1) gamma_u - X beta(u), the lowering-side generalized symmetry
    attached to a covector.  Equals q_minus of the Clifford image of u."""
    gens = build_osp(ctx)
    return (gens.H - 1) * ctx.gamma(u) - gens.X * ctx.from_vector(beta(u))


# -- Casimir elements -----------------------------------------------------------


def scasimir(ctx: Context) -> Element:
    """The odd-commuting central element: (XD - DX)/2 + 1/2."""
    gens = build_osp(ctx)
    return ((gens.X * gens.D - gens.D * gens.X) * Fraction(1, 2)
            + ctx.scalar_elem(Fraction(1, 2)))


def casimir(ctx: Context) -> Element:
    """The quadratic Casimir element of the realization."""
    gens = build_osp(ctx)
    ff = (gens.X * gens.D - gens.D * gens.X) * Fraction(1, 2)
    return (gens.H * gens.H
            + (gens.Ep * gens.Em + gens.Em * gens.Ep) * 2
            - ff)
