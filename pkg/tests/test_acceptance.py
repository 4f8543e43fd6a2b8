"""Acceptance criteria, one test per criterion.

Every test prints a single PASS/FAIL line (visible with ``pytest -s``) and
enforces its runtime budget.  All equality assertions are exact; the only
tolerance anywhere is the advisory floating-point circle sampling in
criterion 8, pinned at 1e-9.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from specfactor import (
    INFINITY,
    Poly,
    RatMat,
    analyze_product,
    blaschke,
    degree_deficit_identity_holds,
    generate_instance,
    make_elementary,
    paired_cancellation_holds,
    pole_additivity_holds,
    potapov_factorize,
    psd_on_circle,
    run_sweep,
    support_points,
)
from specfactor.spectra import default_geometries

from helpers import (
    M,
    RF,
    SAFE_POLE_POOL,
    pt,
    random_direction,
    random_elementary_product,
    random_full_rank_pair,
)
from oracles import brute_point_degrees


@contextmanager
def criterion(number, label, budget_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number} ({label}): FAIL")
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {number} ({label}): PASS in {elapsed:.2f}s (budget {budget_seconds}s)")
    assert elapsed < budget_seconds, f"criterion {number} exceeded its {budget_seconds}s budget"


def test_criterion_1_golden_product_and_cancellation():
    with criterion(1, "golden worked product", 1.0):
        g = M([[1, -1]])
        h = M([[RF([3, 2], [2, 3, 1])], [RF([1], [2, 1])]])
        assert g * h == M([[RF([1], [1, 1])]])
        report = analyze_product(g, h, pt(-2))
        assert report.pole_cancellation is True
        assert report.zero_cancellation is False
        assert report.zero_pole_cancellation is False


def test_criterion_2_elementary_factor_identities():
    with criterion(2, "elementary factor identities", 30.0):
        rng = random.Random(2024)
        alphas = SAFE_POLE_POOL + [pt(0), pt(Fraction(-1, 3)), pt(Fraction(2, 5), Fraction(1, 5))]
        for trial in range(100):
            r = (trial % 3) + 2  # 2, 3, 4
            alpha = alphas[trial % len(alphas)]
            v = random_direction(rng, r)
            u = make_elementary(alpha, v)
            ident = RatMat.identity(r)
            star = u.paraconj_transpose()
            assert star * u == ident
            assert u * star == ident
            assert u.determinant() == blaschke(alpha)
            assert u.mcmillan_degree() == 1
            sm = u.sm_structure()
            assert sm.rank == r
            if not alpha.is_infinite and not alpha.value.is_zero():
                partner = alpha.conj_pair()
                expected_eps = tuple([Poly.one()] * (r - 1) + [Poly.linear(partner.value)])
                expected_psi = tuple([Poly.linear(alpha.value)] + [Poly.one()] * (r - 1))
                assert sm.eps == expected_eps
                assert sm.psi == expected_psi
            elif alpha.is_infinite:
                # pole at infinity, zero at 0: the finite form shows only the zero
                assert sm.psi == tuple([Poly.one()] * r)
                assert sm.eps == tuple([Poly.one()] * (r - 1) + [Poly.variable()])
                assert u.pole_degree(INFINITY) == 1
            else:
                # pole at 0, zero at infinity: the finite form shows only the pole
                assert sm.psi == tuple([Poly.variable()] + [Poly.one()] * (r - 1))
                assert sm.eps == tuple([Poly.one()] * r)
                assert u.zero_degree(INFINITY) == 1


def test_criterion_3_potapov_roundtrip():
    with criterion(3, "all-pass factorization roundtrip", 120.0):
        rng = random.Random(33)
        for trial in range(100):
            k = (trial % 6) + 1
            r = 2 if trial % 2 else 3
            v, poles = random_elementary_product(rng, r, k)
            fact = potapov_factorize(v)
            assert len(fact.factors) == k
            assert v.mcmillan_degree() == k
            assert fact.product() == v


def test_criterion_4_deficit_identity_sweep():
    with criterion(4, "full-rank cancellation identity sweep", 120.0):
        rng = random.Random(44)
        checked = 0
        for _ in range(500):
            g, h = random_full_rank_pair(rng, max_side=3, max_deg=2)
            for point in support_points(g, h):
                assert degree_deficit_identity_holds(g, h, point)
                assert paired_cancellation_holds(g, h, point)
                checked += 1
        assert checked >= 1500


def test_criterion_5_pole_additivity_sweep():
    with criterion(5, "pole additivity sweep", 120.0):
        rng = random.Random(55)
        asserted = 0
        nontrivial_inf = 0
        for _ in range(500):
            g, h = random_full_rank_pair(rng, max_side=3, max_deg=2)
            probes = set()
            for mat in (g, h):
                probes.update(mat.finite_pole_points(strict=False))
            probes.add(INFINITY)
            probes.add(pt(Fraction(9, 11)))
            for point in probes:
                if g.zero_degree(point) or h.zero_degree(point):
                    continue
                assert pole_additivity_holds(g, h, point)
                asserted += 1
                if point.is_infinite and (
                    g.pole_degree(point) or h.pole_degree(point)
                ):
                    nontrivial_inf += 1
        assert asserted >= 1000
        assert nontrivial_inf >= 1


def test_criterion_6_uniqueness_harness():
    with criterion(6, "uniqueness harness sweep", 300.0):
        report = run_sweep(208)
        assert len(report["instances"]) == 208
        geometries = {rec["geometry"] for rec in report["instances"]}
        assert len(geometries) >= 3
        assert report["summary"]["uniqueness_violated"] == 0
        assert report["summary"]["transfer_mismatches"] == 0
        for rec in report["instances"]:
            orth = rec["orthogonal_case"]
            assert orth["verdict"] == "UNIQUE"
            assert orth["transfer_matches"] is True
            pert = rec["allpass_case"]
            assert pert["verdict"] == "HYPOTHESIS_FAILED"
            assert any(
                "minimality" in name or "analyticity" in name
                for name in pert["failed_hypotheses"]
            )


def test_criterion_7_degree_oracle_crosscheck():
    with criterion(7, "pole/zero degree oracle crosscheck", 60.0):
        rng = random.Random(77)
        probes = [pt(2), pt(-3), pt(Fraction(1, 2)), pt(5), pt(Fraction(1, 3)),
                  pt(-1), pt(0), INFINITY]
        instances = 0
        while instances < 50:
            g, h = random_full_rank_pair(rng, max_side=3, max_deg=1)
            for mat in (g, h):
                if mat.rows > 3 or mat.cols > 3:
                    continue
                for probe in probes:
                    dz, dp = brute_point_degrees(mat, probe)
                    assert mat.zero_degree(probe) == dz
                    assert mat.pole_degree(probe) == dp
                instances += 1
                if instances >= 50:
                    break


def test_criterion_8_psd_sanity():
    with criterion(8, "positive semidefinite circle sampling", 10.0):
        geometries = default_geometries()
        for seed in range(10):
            geo = geometries[seed % len(geometries)]
            spectrum, _ = generate_instance(
                900 + seed, (1 + seed % 2, 2), 1 + seed % 3, geo["region_p"], geo["region_z"]
            )
            report = psd_on_circle(spectrum, samples=64, tol=1e-9)
            assert report.ok
        negative = psd_on_circle(M([[-1]]), samples=64, tol=1e-9)
        assert not negative.ok
