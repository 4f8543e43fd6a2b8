"""Shared builders for the test suite: shorthand constructors and seeded
random instances with controlled pole/zero layouts."""

import random
from fractions import Fraction

from specfactor import (
    GaussianRational,
    INFINITY,
    Point,
    Poly,
    RatFun,
    RatMat,
    make_elementary,
)
from specfactor.linsolve import matrix_rank


def gr(re, im=0) -> GaussianRational:
    return GaussianRational(re, im)


def pt(re, im=0) -> Point:
    return Point(GaussianRational(re, im))


def P(*coeffs) -> Poly:
    """Polynomial from ascending coefficients (ints, Fractions, scalars)."""
    return Poly(coeffs)


def RF(num, den=None) -> RatFun:
    return RatFun(num if isinstance(num, Poly) else P(*num),
                  None if den is None else (den if isinstance(den, Poly) else P(*den)))


def M(rows) -> RatMat:
    return RatMat(rows)


# off-circle Q(i) points with no conjugate-reciprocal collisions inside the pool
# (no element is 1/conj of another element, so products of elementary factors
# drawn from the pool keep additive degrees)
SAFE_POLE_POOL = [
    pt(2),
    pt(3),
    pt(-2),
    pt(Fraction(5, 2)),
    pt(1, 1),
    pt(Fraction(1, 2), Fraction(-1, 2)),
    pt(0, 2),
    pt(-3, 1),
    INFINITY,
]


def random_direction(rng: random.Random, r: int):
    while True:
        v = [gr(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(r)]
        if any(not x.is_zero() for x in v):
            return v


def random_elementary_product(rng: random.Random, r: int, k: int):
    """Product of k elementary factors with poles from the safe pool
    (repeats allowed); returns (matrix, pole list)."""
    poles = [rng.choice(SAFE_POLE_POOL) for _ in range(k)]
    mat = None
    for p in poles:
        u = make_elementary(p, random_direction(rng, r))
        mat = u if mat is None else mat * u
    if mat is None:
        mat = RatMat.identity(r)
    return mat, poles


def random_constant_full_rank(rng: random.Random, rows: int, cols: int) -> RatMat:
    while True:
        grid = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        if matrix_rank([[gr(x) for x in row] for row in grid]) == min(rows, cols):
            return RatMat(grid)


def random_diag_ratfun(rng, r, pole_pool, zero_pool, max_deg=2):
    """Diagonal rational matrix with poles and zeros drawn from disjoint
    pools; every diagonal entry is a ratio of split linear factors."""
    diag = []
    for _ in range(r):
        num = Poly.one()
        den = Poly.one()
        for _ in range(rng.randint(0, max_deg)):
            num = num * Poly.linear(rng.choice(zero_pool).value)
        for _ in range(rng.randint(0, max_deg)):
            den = den * Poly.linear(rng.choice(pole_pool).value)
        diag.append(RatFun(num, den))
    return RatMat.diagonal(diag)


def random_full_rank_pair(rng, max_side=3, max_deg=2, biproper=False):
    """(G, H) with rank(G) = cols(G) = rows(H) = rank(H).

    G is n x r with full column rank, H is r x m with full row rank, built
    as constant full-rank matrices sandwiching diagonal rational cores.
    With biproper=True each diagonal entry has equal numerator and
    denominator degree, so neither factor has structure at infinity from
    entry growth imbalance.
    """
    r = rng.randint(1, max_side - 1) if max_side > 1 else 1
    n = rng.randint(r, max_side)
    m = rng.randint(r, max_side)
    pole_pool = [pt(2), pt(-3), pt(Fraction(1, 2)), pt(Fraction(-5, 3)), pt(4)]
    zero_pool = [pt(5), pt(Fraction(1, 3)), pt(-1), pt(Fraction(7, 2)), pt(Fraction(-2, 7))]
    if biproper:
        dg = _biproper_diag(rng, r, pole_pool, zero_pool, max_deg)
        dh = _biproper_diag(rng, r, pole_pool, zero_pool, max_deg)
    else:
        dg = random_diag_ratfun(rng, r, pole_pool, zero_pool, max_deg)
        dh = random_diag_ratfun(rng, r, pole_pool, zero_pool, max_deg)
    c = random_constant_full_rank(rng, n, r)
    f = random_constant_full_rank(rng, r, m)
    mid = random_constant_full_rank(rng, r, r)
    return c * dg * mid, dh * f


def _biproper_diag(rng, r, pole_pool, zero_pool, max_deg):
    diag = []
    for _ in range(r):
        num = Poly.one()
        den = Poly.one()
        for _ in range(rng.randint(0, max_deg)):
            num = num * Poly.linear(rng.choice(zero_pool).value)
            den = den * Poly.linear(rng.choice(pole_pool).value)
        diag.append(RatFun(num, den))
    return RatMat.diagonal(diag)
