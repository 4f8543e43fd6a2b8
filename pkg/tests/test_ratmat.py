import random
from fractions import Fraction

import pytest

from specfactor import (
    INFINITY,
    Poly,
    RatFun,
    RatMat,
    make_elementary,
)
from specfactor.errors import (
    DimensionMismatchError,
    MinimalInverseError,
    NonGaussianPoleError,
    RankDeficiencyError,
    ZeroMatrixError,
)
from specfactor.linsolve import matrix_rank
from specfactor.ratmat import point_degrees_by_valuation

from helpers import M, P, RF, gr, pt, random_elementary_product
from oracles import brute_point_degrees

GOLDEN_G = M([[1, -1]])
GOLDEN_H = M([[RF([3, 2], [2, 3, 1])], [RF([1], [2, 1])]])


def test_golden_product():
    gh = GOLDEN_G * GOLDEN_H
    assert gh == M([[RF([1], [1, 1])]])


def test_identity_product():
    g = M([[RF([1, 1], [0, 1]), 2], [0, RF([1], [3, 1])]])
    assert g * RatMat.identity(2) == g
    assert RatMat.identity(2) * g == g


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        GOLDEN_G * GOLDEN_G


def test_paraconj_transpose():
    f = RF([-2, 1], [-3, 1])  # (z-2)/(z-3)
    w = M([[f]])
    assert w.paraconj_transpose() == M([[f.paraconj()]])
    t = M([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])
    assert t.paraconj_transpose() == t.transpose()
    ident = RatMat.identity(3)
    assert ident.paraconj_transpose() == ident
    g = M([[RF([1, gr(1, 1)], [2, 1]), 1], [0, RF([0, 1])]])
    assert g.paraconj_transpose().paraconj_transpose() == g


def test_normal_rank():
    assert GOLDEN_G.normal_rank() == 1
    assert RatMat.zeros(2, 3).normal_rank() == 0
    rng = random.Random(3)
    a = M([[rng.randint(-3, 3) for _ in range(3)] for _ in range(2)])
    b = M([[rng.randint(-3, 3) for _ in range(3)] for _ in range(2)])
    prod = a.transpose() * b  # 3x3 of rank <= 2
    assert prod.normal_rank() <= 2
    # rank oracle: evaluate at a non-pole rational point and rank the scalars
    z0 = gr(Fraction(9, 7))
    values = [[e.eval(z0) for e in row] for row in prod.entries]
    assert prod.normal_rank() == matrix_rank(values)


def test_sm_structure_scalar():
    sm = M([[RF([1], [1, 1])]]).sm_structure()
    assert sm.rank == 1
    assert sm.eps == (Poly.one(),)
    assert sm.psi == (P(1, 1),)


def test_sm_structure_golden_column():
    sm = GOLDEN_H.sm_structure()
    assert sm.rank == 1
    assert sm.eps == (Poly.one(),)
    assert sm.psi == (P(2, 3, 1),)


def test_sm_structure_elementary_factor():
    u = make_elementary(pt(2), [1, 0])
    sm = u.sm_structure()
    assert sm.rank == 2
    assert sm.eps == (Poly.one(), P(Fraction(-1, 2), 1))
    assert sm.psi == (P(-2, 1), Poly.one())


def test_sm_structure_zero_matrix():
    with pytest.raises(ZeroMatrixError):
        RatMat.zeros(2, 2).sm_structure()


def test_sm_divisibility_chains():
    rng = random.Random(17)
    for _ in range(15):
        mat, _ = random_elementary_product(rng, 2, rng.randint(1, 3))
        scale = RF([1], [rng.choice([2, 3]), 1])
        mat = mat * scale
        sm = mat.sm_structure()
        for i in range(sm.rank):
            from specfactor.poly import poly_gcd

            assert poly_gcd(sm.eps[i], sm.psi[i]).is_one()
            assert sm.eps[i].is_monic() and sm.psi[i].is_monic()
            if i + 1 < sm.rank:
                assert (sm.eps[i + 1] % sm.eps[i]).is_zero()
                assert (sm.psi[i] % sm.psi[i + 1]).is_zero()


def test_point_degrees_golden():
    assert GOLDEN_H.pole_degree(pt(-2)) == 1
    assert GOLDEN_H.pole_degree(pt(-1)) == 1
    gh = GOLDEN_G * GOLDEN_H
    assert gh.pole_degree(pt(-2)) == 0
    assert gh.pole_degree(pt(-1)) == 1
    u = make_elementary(pt(2), [1, 1])
    assert u.zero_degree(pt(Fraction(1, 2))) == 1
    assert u.pole_degree(pt(2)) == 1


def test_degrees_match_brute_oracle():
    rng = random.Random(23)
    probes = [pt(2), pt(Fraction(1, 2)), pt(-2), pt(0), pt(1, 1), INFINITY]
    for _ in range(12):
        mat, _ = random_elementary_product(rng, 2, rng.randint(1, 3))
        for probe in probes:
            dz, dp = brute_point_degrees(mat, probe)
            assert mat.zero_degree(probe) == dz
            assert mat.pole_degree(probe) == dp
            assert point_degrees_by_valuation(mat, probe) == (dz, dp)


def test_mcmillan_degree_examples():
    assert M([[RF([1], [1, 1])]]).mcmillan_degree() == 1
    u = make_elementary(pt(2), [1, 2])
    assert u.mcmillan_degree() == 1
    prod = (
        make_elementary(pt(2), [1, 0])
        * make_elementary(pt(3), [1, 1])
        * make_elementary(pt(0, 2), [0, 1])
    )
    assert prod.mcmillan_degree() == 3


def test_mcmillan_degree_at_infinity():
    assert M([[RF([0, 0, 1])]]).mcmillan_degree() == 2
    assert M([[RF([0, 1]), 1]]).mcmillan_degree() == 1


def test_mcmillan_degree_requires_enumerable_poles():
    bad = M([[RF([1], [-2, 0, 1])]])  # pole pair at +-sqrt(2)
    with pytest.raises(NonGaussianPoleError):
        bad.mcmillan_degree()


def test_mcmillan_invariant_under_paraconj_transpose():
    rng = random.Random(5)
    for _ in range(6):
        mat, _ = random_elementary_product(rng, 2, rng.randint(1, 3))
        mat = mat * RF([1, 1], [Fraction(1, 3), 1])
        assert mat.paraconj_transpose().mcmillan_degree() == mat.mcmillan_degree()


def test_minimal_right_inverse_scalar():
    w = M([[RF([-2, 1], [-3, 1])]])
    assert w.minimal_right_inverse() == M([[RF([-3, 1], [-2, 1])]])


def test_minimal_right_inverse_constant_wide():
    g = M([[1, 0]])
    x = g.minimal_right_inverse()
    assert x == M([[1], [0]])
    assert g * x == RatMat.identity(1)
    assert x.finite_pole_points() == ()
    assert not x.has_pole_at_infinity()


def test_minimal_right_inverse_of_allpass_is_star():
    u = make_elementary(pt(2), [1, gr(0, 1)])
    assert u.minimal_right_inverse() == u.paraconj_transpose()


def test_minimal_right_inverse_infinity_balance():
    # G = [1/z, 1/z^2] needs a right inverse growing like z, no faster
    g = M([[RF([1], [0, 1]), RF([1], [0, 0, 1])]])
    x = g.minimal_right_inverse()
    assert g * x == RatMat.identity(1)
    assert x.pole_degree(INFINITY) == g.zero_degree(INFINITY) == 1
    assert x.finite_pole_points() == ()


def test_minimal_right_inverse_nonexistence():
    g = M([[RF([0, 1]), RF([1], [0, 1])]])  # [z, 1/z] admits no minimal inverse
    with pytest.raises(MinimalInverseError):
        g.minimal_right_inverse()


def test_minimal_right_inverse_requires_full_row_rank():
    with pytest.raises(RankDeficiencyError):
        M([[1, 1], [1, 1]]).minimal_right_inverse()


def test_minimal_right_inverse_random_wide():
    rng = random.Random(31)
    for _ in range(8):
        core, _ = random_elementary_product(rng, 2, rng.randint(0, 2))
        zeros = RatMat.diagonal(
            [RF([rng.choice([-1, 5]), 1]), RatFun.one()]
        )
        grid = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(2)]
        if matrix_rank([[gr(x) for x in row] for row in grid]) < 2:
            continue
        g = core * zeros * M(grid)
        x = g.minimal_right_inverse()
        assert g * x == RatMat.identity(2)
        sm_g = g.sm_structure()
        sm_x = x.sm_structure()
        assert sm_x.pole_polynomial() == sm_g.zero_polynomial()
        assert x.pole_degree(INFINITY) == g.zero_degree(INFINITY)


def test_determinant():
    u = make_elementary(pt(2), [1, 1])
    from specfactor import blaschke

    assert u.determinant() == blaschke(pt(2))
    assert RatMat.identity(3).determinant() == RatFun.one()
    with pytest.raises(DimensionMismatchError):
        M([[1, 0]]).determinant()


def test_entry_access_and_shape():
    g = GOLDEN_H
    assert g.rows == 2 and g.cols == 1
    assert g[0, 0] == RF([3, 2], [2, 3, 1])
    assert g.entry(1, 0) == RF([1], [2, 1])


def test_reciprocal_subs_matrix():
    g = M([[RF([0, 1]), 1]])
    flipped = g.reciprocal_subs()
    assert flipped == M([[RF([1], [0, 1]), 1]])
