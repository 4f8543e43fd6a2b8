import random
from fractions import Fraction

import pytest

from specfactor import (
    AllPassFactorization,
    ElementaryFactor,
    INFINITY,
    RatFun,
    RatMat,
    blaschke,
    degree_of_factorization,
    is_parahermitian,
    is_paraunitary,
    make_elementary,
    potapov_factorize,
)
from specfactor.errors import DimensionMismatchError

from helpers import (
    M,
    RF,
    SAFE_POLE_POOL,
    gr,
    pt,
    random_direction,
    random_elementary_product,
)


def test_make_elementary_axis_projection():
    u = make_elementary(pt(2), [1, 0])
    b = blaschke(pt(2))
    assert u == RatMat.diagonal([b, RatFun.one()])


def test_make_elementary_at_infinity():
    u = make_elementary(INFINITY, [1, 0])
    assert u == RatMat.diagonal([RF([0, 1]), RatFun.one()])


def test_elementary_determinant_is_kernel():
    rng = random.Random(2)
    for _ in range(10):
        alpha = rng.choice(SAFE_POLE_POOL)
        u = make_elementary(alpha, random_direction(rng, 3))
        assert u.determinant() == blaschke(alpha)


def test_elementary_rejects_circle_pole_and_zero_vector():
    with pytest.raises(ValueError):
        make_elementary(pt(1), [1, 0])
    with pytest.raises(ValueError):
        make_elementary(pt(2), [0, 0])


def test_projection_is_rank_one_idempotent_hermitian():
    f = ElementaryFactor(pt(2), [gr(1, 2), gr(0, -1), gr(3)])
    p = f.projection()
    n = len(p)
    # Hermitian
    for i in range(n):
        for j in range(n):
            assert p[i][j] == p[j][i].conj()
    # idempotent
    sq = [
        [sum((p[i][k] * p[k][j] for k in range(n)), gr(0)) for j in range(n)]
        for i in range(n)
    ]
    assert sq == p
    # trace one (rank one orthogonal projection)
    trace = sum((p[i][i] for i in range(n)), gr(0))
    assert trace == gr(1)


def test_direction_scaling_invariance():
    u1 = make_elementary(pt(3), [gr(Fraction(1, 2)), gr(Fraction(1, 2))])
    u2 = make_elementary(pt(3), [gr(7), gr(7)])
    assert u1 == u2
    assert ElementaryFactor(pt(3), [gr(Fraction(1, 2)), gr(Fraction(1, 2))]).v == (
        gr(1),
        gr(1),
    )


def test_is_paraunitary():
    assert is_paraunitary(make_elementary(pt(2), [1, 1]))
    assert is_paraunitary(RatMat.identity(3))
    assert not is_paraunitary(RatMat.diagonal([RF([1], [-2, 1]), RatFun.one()]))
    with pytest.raises(DimensionMismatchError):
        is_paraunitary(M([[1, 0]]))


def test_is_parahermitian():
    w = M([[RF([-2, 1], [-3, 1]), 1]])
    phi = w.paraconj_transpose() * w
    assert is_parahermitian(phi)
    assert not is_parahermitian(M([[RF([0, 1])]]))
    assert is_parahermitian(M([[2, 1], [1, 3]]))
    with pytest.raises(DimensionMismatchError):
        is_parahermitian(M([[1, 0]]))


def test_pole_zero_pairing():
    rng = random.Random(9)
    v, poles = random_elementary_product(rng, 2, 3)
    for alpha in set(poles):
        assert v.pole_degree(alpha) == v.zero_degree(alpha.conj_pair())


def test_potapov_single_factor():
    u = make_elementary(pt(2), [1, 0])
    fact = potapov_factorize(u)
    assert fact.constant == RatMat.identity(2)
    assert len(fact.factors) == 1
    assert fact.factors[0].alpha == pt(2)
    assert fact.product() == u


def test_potapov_three_distinct_poles():
    factors = [
        make_elementary(pt(2), [1, 1]),
        make_elementary(pt(3), [1, -1]),
        make_elementary(pt(1, 1), [gr(0, 1), gr(1)]),
    ]
    v = factors[0] * factors[1] * factors[2]
    fact = potapov_factorize(v)
    assert len(fact) == 3
    assert v.mcmillan_degree() == 3
    assert fact.product() == v
    assert sorted(str(p) for p in fact.pole_points()) == ["1+1*i", "2", "3"]


def test_potapov_constant_input():
    c = M([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])
    fact = potapov_factorize(c)
    assert len(fact) == 0
    assert fact.constant == c
    assert degree_of_factorization(fact) == 0


def test_potapov_with_constant_prefix():
    c = M([[0, 1], [-1, 0]])
    v = c * make_elementary(pt(2), [1, 2]) * make_elementary(INFINITY, [0, 1])
    fact = potapov_factorize(v)
    assert len(fact) == 2
    assert fact.product() == v
    assert fact.constant.is_constant()


def test_potapov_repeated_pole():
    v = make_elementary(pt(2), [1, 0]) * make_elementary(pt(2), [1, 1])
    assert v.mcmillan_degree() == 2
    fact = potapov_factorize(v)
    assert len(fact) == 2
    assert all(f.alpha == pt(2) for f in fact.factors)
    assert fact.product() == v


def test_potapov_pole_at_zero_and_infinity():
    v = make_elementary(pt(0), [1, 1]) * make_elementary(pt(3), [0, 1])
    fact = potapov_factorize(v)
    assert len(fact) == 2
    assert fact.product() == v
    w = make_elementary(INFINITY, [2, 1])
    fact_w = potapov_factorize(w)
    assert len(fact_w) == 1 and fact_w.product() == w


def test_potapov_degree_collapsing_product():
    # pole at 1/2 pairs with the zero of the factor at 2: the product has
    # lower degree than the factor count, and the factorizer returns the
    # minimal number of factors
    v = make_elementary(pt(2), [1, 0]) * make_elementary(pt(Fraction(1, 2)), [1, 0])
    deg = v.mcmillan_degree()
    fact = potapov_factorize(v)
    assert len(fact) == deg
    assert fact.product() == v


def test_potapov_rejects_non_paraunitary():
    with pytest.raises(ValueError):
        potapov_factorize(M([[RF([1], [-2, 1]), 0], [0, 1]]))


def test_potapov_roundtrip_sweep():
    rng = random.Random(41)
    for _ in range(10):
        k = rng.randint(1, 4)
        v, poles = random_elementary_product(rng, 2, k)
        fact = potapov_factorize(v)
        assert len(fact) == k
        assert fact.product() == v
        assert v.mcmillan_degree() == k


def test_factorization_validates_constant():
    with pytest.raises(ValueError):
        AllPassFactorization(M([[2]]), [])
    with pytest.raises(ValueError):
        AllPassFactorization(M([[RF([0, 1])]]), [])


def test_potapov_pole_multiset_matches_input():
    rng = random.Random(57)
    for _ in range(6):
        v, _ = random_elementary_product(rng, 2, rng.randint(1, 4))
        fact = potapov_factorize(v)
        for alpha in set(fact.pole_points()):
            count = sum(1 for f in fact.factors if f.alpha == alpha)
            assert count == v.pole_degree(alpha)
        total = sum(v.pole_degree(a) for a in set(fact.pole_points()))
        assert total == len(fact.factors) == v.mcmillan_degree()


def test_square_allpass_degrees_balance():
    # det of an all-pass product is a ratio of equal-degree polynomials, so
    # zero and pole degrees balance over the extended plane
    rng = random.Random(61)
    for _ in range(5):
        v, _ = random_elementary_product(rng, 2, rng.randint(1, 3))
        points = set(v.finite_pole_points()) | set(v.finite_zero_points())
        points.add(INFINITY)
        balance = sum(v.zero_degree(p) - v.pole_degree(p) for p in points)
        assert balance == 0
