"""Pole/zero cancellation analysis for products of rational matrices.

A product G H has a pole cancellation at a point when the pole degree of
the product falls short of the sum of the factors' pole degrees, a zero
cancellation when the zero degrees drop, and a zero-pole cancellation when
both happen at once.  For full-rank factors (rank equal to the inner
dimension) the signed pole deficit always equals the signed zero deficit,
so any one-sided cancellation is automatically two-sided; the executable
checks below verify those facts on concrete instances.

Analysis is pointwise: cancellations can only occur on the combined
pole/zero support, which ``support_points`` enumerates (Q(i) locations
plus infinity).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RankDeficiencyError, ZeroMatrixError
from .ratmat import RatMat
from .scalars import INFINITY, Point


@dataclass(frozen=True)
class CancellationReport:
    """Degrees of both factors and their product at one point, plus the
    three cancellation flags derived from them."""

    point: Point
    dp_g: int
    dp_h: int
    dp_gh: int
    dz_g: int
    dz_h: int
    dz_gh: int
    pole_cancellation: bool
    zero_cancellation: bool
    zero_pole_cancellation: bool


def analyze_product(g: RatMat, h: RatMat, point: Point) -> CancellationReport:
    """Classify the cancellation behaviour of G H at one point."""
    product = g * h
    if g.is_zero() or h.is_zero() or product.is_zero():
        raise ZeroMatrixError("cancellation analysis needs nonzero G, H and G*H")
    dp_g = g.pole_degree(point)
    dp_h = h.pole_degree(point)
    dp_gh = product.pole_degree(point)
    dz_g = g.zero_degree(point)
    dz_h = h.zero_degree(point)
    dz_gh = product.zero_degree(point)
    pole_cancel = dp_gh < dp_g + dp_h
    zero_cancel = dz_gh < dz_g + dz_h
    return CancellationReport(
        point=point,
        dp_g=dp_g,
        dp_h=dp_h,
        dp_gh=dp_gh,
        dz_g=dz_g,
        dz_h=dz_h,
        dz_gh=dz_gh,
        pole_cancellation=pole_cancel,
        zero_cancellation=zero_cancel,
        zero_pole_cancellation=pole_cancel and zero_cancel,
    )


def _require_full_rank_pair(g: RatMat, h: RatMat):
    r = g.cols
    if h.rows != r:
        raise RankDeficiencyError("inner dimensions differ")
    if g.normal_rank() != r or h.normal_rank() != r:
        raise RankDeficiencyError(
            "needs rank(G) = cols(G) = rows(H) = rank(H); "
            f"got rank(G)={g.normal_rank()}, rank(H)={h.normal_rank()}, r={r}"
        )


def paired_cancellation_holds(g: RatMat, h: RatMat, point: Point) -> bool:
    """For full-rank factors: any pole or zero cancellation at the point is
    a zero-pole cancellation.  True also when nothing cancels."""
    _require_full_rank_pair(g, h)
    report = analyze_product(g, h, point)
    if report.pole_cancellation or report.zero_cancellation:
        return report.zero_pole_cancellation
    return True


def degree_deficit_identity_holds(g: RatMat, h: RatMat, point: Point) -> bool:
    """For full-rank factors the signed pole deficit of the product equals
    the signed zero deficit, exactly."""
    _require_full_rank_pair(g, h)
    report = analyze_product(g, h, point)
    pole_deficit = report.dp_gh - report.dp_g - report.dp_h
    zero_deficit = report.dz_gh - report.dz_g - report.dz_h
    return pole_deficit == zero_deficit


def pole_additivity_holds(g: RatMat, h: RatMat, point: Point) -> bool:
    """With no zeros at the point (and full-rank factors), pole degrees add
    exactly in the product.  Valid at finite points and at infinity."""
    _require_full_rank_pair(g, h)
    if g.zero_degree(point) != 0 or h.zero_degree(point) != 0:
        raise ValueError(f"hypothesis violated: a factor has a zero at {point}")
    report = analyze_product(g, h, point)
    return report.dp_gh == report.dp_g + report.dp_h


def support_points(g: RatMat, h: RatMat) -> tuple[Point, ...]:
    """Q(i) poles and zeros of G, H and G H, plus infinity.

    Locations outside Q(i) are not enumerable and are skipped; they cannot
    be probed by the pointwise checks anyway.
    """
    points: set[Point] = set()
    product = g * h
    for mat in (g, h, product):
        if mat.is_zero():
            continue
        points.update(mat.finite_pole_points(strict=False))
        points.update(mat.finite_zero_points(strict=False))
    ordered = sorted(
        points,
        key=lambda p: (p.value.abs2(), p.value.re, p.value.im),
    )
    ordered.append(INFINITY)
    return tuple(ordered)
