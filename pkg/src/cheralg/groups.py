"""Finite real reflection groups of the crystallographic families A, B, D.

Elements are stored as exact rational matrices giving the action on covector
coordinates: row p of the matrix holds the coordinates of the image of x_p.
The contragredient action on V is the inverse transpose, so the natural
pairing is preserved.  Only these families are built in, because their roots
have rational coordinates of squared length 1 or 2, which keeps every
construction inside the scalar ring.  Arbitrary finite subgroups of the
orthogonal group can be supplied as generator matrices; the closure is
enumerated up to a cap.

A group may be embedded in an ambient dimension larger than its natural one;
the extra coordinates are fixed pointwise.  This keeps identities that need
many distinct orthonormal directions affordable with a tiny group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import QuadraticSpace
from .scalars import BN_ONE, BN_ZERO, as_base

DEFAULT_ORDER_CAP = 10_000

Matrix = tuple  # tuple of rows, each a tuple of Fraction


def _identity_matrix(d: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(d))
                 for i in range(d))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    # Row p of the product is the image of x_p under "first a, then b":
    # (ab).x_p = a(b.x_p) requires composing actions; we store plain matrix
    # products and fix the composition order at the call sites.
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n))


def _mat_inv(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _primitive(vec):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    denls = [c.denominator for c in vec if c != 0]
    if not denls:
        raise ValueError("zero vector has no primitive form")
    mult = 1
    for dnm in denls:
        mult = mult * dnm // gcd(mult, dnm)
    ints = [int(c * mult) for c in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def _minus_one_eigenvector(mat: Matrix):
    """Kernel of (M^T + I); one-dimensional for a reflection matrix."""
    n = len(mat)
    rows = [[mat[j][i] + (1 if i == j else 0) for j in range(n)]
            for i in range(n)]
    # Gaussian elimination to row echelon form.
    pivots = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, n) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for k in range(n):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [vk - f * vc for vk, vc in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ValueError("matrix is not a reflection (fixed space too small)")
    f = free[0]
    sol = [Fraction(0)] * n
    sol[f] = Fraction(1)
    for i, c in enumerate(pivots):
        sol[c] = -rows[i][f]
    return _primitive(sol)


@dataclass(frozen=True)
class Reflection:
    """A reflection with its root data in the distinguished coordinates."""

    elem: int                       # group-element index
    root: tuple                     # covector coordinates (Fraction)
    coroot: tuple                   # vector coordinates (Fraction)
    root_norm: Fraction             # B(root, root)
    class_id: int                   # conjugacy class of the reflection


class ReflectionGroup:
    """A finite B-preserving matrix group with flagged reflections."""

    def __init__(self, space: QuadraticSpace, mats, label: str = "custom"):
        self.space = space
        self.dim = space.dim
        self.label = label
        self.mats = tuple(mats)
        self.index = {m: i for i, m in enumerate(self.mats)}
        if len(self.index) != len(self.mats):
            raise ValueError("duplicate group elements")
        ident = _identity_matrix(self.dim)
        if self.mats[0] != ident:
            raise ValueError("element 0 must be the identity")
        self._check_preserves_form()
        self.ymats = tuple(_mat_inv(_transpose(m)) for m in self.mats)
        self._mul_memo: dict = {}
        self._inv_memo: dict = {}
        if len(self.mats) <= 600:
            for i in range(len(self.mats)):
                for j in range(len(self.mats)):
                    self.mul(i, j)
        self._find_reflections()

    # -- group structure ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.mats)

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        k = self._mul_memo.get(key)
        if k is None:
            # (gh).x_p = g.(h.x_p); with rows holding basis images this
            # composes as the matrix product mats[j] @ mats[i].
            prod = _mat_mul(self.mats[j], self.mats[i])
            k = self.index.get(prod)
            if k is None:
                raise ValueError("group is not closed under multiplication")
            self._mul_memo[key] = k
        return k

    def inv(self, i: int) -> int:
        k = self._inv_memo.get(i)
        if k is None:
            k = self.index[_mat_inv(self.mats[i])]
            self._inv_memo[i] = k
        return k

    def _check_preserves_form(self):
        gram = self.space.gram
        d = self.dim
        for m in self.mats:
            for p in range(d):
                for q in range(p, d):
                    acc = BN_ZERO
                    for k in range(d):
                        if m[p][k] == 0:
                            continue
                        for l in range(d):
                            if m[q][l] == 0:
                                continue
                            acc = acc + as_base(m[p][k] * m[q][l]) * gram[k][l]
                    if acc != gram[p][q]:
                        raise ValueError(
                            "group element does not preserve the bilinear form")

    # -- reflections ----------------------------------------------------------

    def _find_reflections(self):
        d = self.dim
        refl_elems = []
        for i, m in enumerate(self.mats):
            if i == 0 or self.mul(i, i) != 0:
                continue
            if sum(m[p][p] for p in range(d)) == d - 2:
                refl_elems.append(i)
        roots = {i: _minus_one_eigenvector(self.mats[i]) for i in refl_elems}
        order = sorted(refl_elems, key=lambda i: roots[i])
        # Conjugacy classes, numbered by first appearance in root order.
        class_of: dict = {}
        next_id = 0
        for i in order:
            if i in class_of:
                continue
            class_of[i] = next_id
            for g in range(self.order):
                j = self.mul(self.mul(g, i), self.inv(g))
                class_of.setdefault(j, next_id)
            next_id += 1
        self.num_classes = next_id
        gram = self.space.gram
        if refl_elems and any(not gram[p][q].is_rational()
                              for p in range(d) for q in range(d)):
            raise ValueError("reflection root data needs a rational Gram matrix")
        refs = []
        for i in order:
            alpha = roots[i]
            norm = Fraction(0)
            for p in range(d):
                if alpha[p] == 0:
                    continue
                for q in range(d):
                    if alpha[q] != 0:
                        norm += alpha[p] * alpha[q] * gram[p][q].a
            beta_alpha = [sum((alpha[q] * gram[q][p].a for q in range(d)
                               if alpha[q] != 0), Fraction(0))
                          for p in range(d)]
            coroot = tuple(2 * b / norm for b in beta_alpha)
            refs.append(Reflection(elem=i, root=alpha, coroot=coroot,
                                   root_norm=norm, class_id=class_of[i]))
        self.reflections = tuple(refs)
        self.reflection_by_elem = {r.elem: r for r in refs}

    # -- actions ----------------------------------------------------------------

    def act_cov_coords(self, g: int, coords):
        """Coordinates of g.u for a covector u (coords over any ring with *)."""
        m = self.mats[g]
        d = self.dim
        return tuple(
            sum((coords[p] * m[p][q] for p in range(d) if m[p][q] != 0),
                start=coords[0] * 0)
            for q in range(d))

    def act_vec_coords(self, g: int, coords):
        m = self.ymats[g]
        d = self.dim
        return tuple(
            sum((coords[p] * m[p][q] for p in range(d) if m[p][q] != 0),
                start=coords[0] * 0)
            for q in range(d))

    def act(self, g: int, u):
        from .geometry import Covector, Vector
        if isinstance(u, Covector):
            return u.space.covector(self.act_cov_coords(g, u.coords))
        if isinstance(u, Vector):
            return u.space.vector(self.act_vec_coords(g, u.coords))
        raise TypeError("act expects a Covector or Vector")

    def __repr__(self):
        return (f"ReflectionGroup({self.label}, order={self.order}, "
                f"dim={self.dim}, reflections={len(self.reflections)}, "
                f"classes={self.num_classes})")


def _signed_permutation_matrix(d, perm, signs):
    zero = Fraction(0)
    rows = []
    for p in range(d):
        row = [zero] * d
        if p < len(perm):
            row[perm[p]] = Fraction(signs[p])
        else:
            row[p] = Fraction(1)
        rows.append(tuple(row))
    return tuple(rows)


def build_group(family: str, rank: int, ambient_dim: int,
                gram=None, order_cap: int = DEFAULT_ORDER_CAP) -> ReflectionGroup:
    """Construct a type A/B/D group embedded in the given ambient dimension."""
    family = family.upper()
    if rank < 1:
        raise ValueError("rank must be positive")
    if family == "A":
        natural = rank + 1
    elif family in ("B", "D"):
        natural = rank
    else:
        raise ValueError(f"unsupported family {family!r}; only A, B, D are "
                         "crystallographic with unit/length-2 roots here")
    if ambient_dim < natural:
        raise ValueError(f"{family}{rank} needs ambient dimension >= {natural}")

    import math
    if family == "A":
        order = math.factorial(rank + 1)
    elif family == "B":
        order = 2 ** rank * math.factorial(rank)
    else:
        order = 2 ** (rank - 1) * math.factorial(rank)
    if order > order_cap:
        raise ValueError(f"group order {order} exceeds cap {order_cap}")

    mats = []
    if family == "A":
        for perm in itertools.permutations(range(natural)):
            mats.append(_signed_permutation_matrix(
                ambient_dim, perm, (1,) * natural))
    else:
        for perm in itertools.permutations(range(natural)):
            for signs in itertools.product((1, -1), repeat=natural):
                if family == "D" and signs.count(-1) % 2:
                    continue
                mats.append(_signed_permutation_matrix(
                    ambient_dim, perm, signs))
    ident = _identity_matrix(ambient_dim)
    mats.sort(key=lambda m: m != ident)
    space = QuadraticSpace(ambient_dim, gram)
    return ReflectionGroup(space, mats, label=f"{family}{rank}@{ambient_dim}")


def from_generators(matrices, gram=None, closure_cap: int = DEFAULT_ORDER_CAP,
                    label: str = "custom") -> ReflectionGroup:
    """Enumerate the closure of rational generator matrices (capped)."""
    if not matrices:
        raise ValueError("at least one generator matrix is required")
    d = len(matrices[0])
    gens = []
    for m in matrices:
        rows = tuple(tuple(Fraction(v) for v in row) for row in m)
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError("generator matrices must be square, same size")
        gens.append(rows)
    ident = _identity_matrix(d)
    seen = {ident}
    frontier = [ident]
    ordered = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = _mat_mul(m, g)
                if prod not in seen:
                    if len(seen) >= closure_cap:
                        raise ValueError(
                            f"closure exceeds the cap of {closure_cap} elements")
                    seen.add(prod)
                    ordered.append(prod)
                    nxt.append(prod)
        frontier = nxt
    space = QuadraticSpace(d, gram)
    return ReflectionGroup(space, ordered, label=label)


def trivial_group(dim: int, gram=None) -> ReflectionGroup:
    """The one-element group; the engine then has no deformation classes."""
    space = QuadraticSpace(dim, gram)
    return ReflectionGroup(space, [_identity_matrix(dim)], label=f"1@{dim}")


def parse_group_spec(spec: str, order_cap: int = DEFAULT_ORDER_CAP) -> ReflectionGroup:
    """Parse strings like ``A1@2``, ``B2@2``, ``A2@3``."""
    s = spec.strip()
    if "@" not in s or len(s) < 4:
        raise ValueError(f"bad group spec {spec!r}; expected like 'A1@2'")
    head, _, tail = s.partition("@")
    family = head[0]
    try:
        rank = int(head[1:])
        ambient = int(tail)
    except ValueError as exc:
        raise ValueError(f"bad group spec {spec!r}") from exc
    return build_group(family, rank, ambient, order_cap=order_cap)
