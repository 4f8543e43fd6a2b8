"""Spectra, spectral factors and the uniqueness harness.

A region descriptor fixes, for every reciprocal pair (z, 1/z) off the unit
circle, which element belongs to the set: a default side (inside or
outside the circle) plus a finite set of flipped pairs, and a flag telling
whether the circle itself is included (the weak variant).  Every such set
satisfies the symplectic pairing law by construction: exactly one of z and
1/z is a member for |z| != 1.

A spectrum is a real para-Hermitian rational matrix, positive semidefinite
on the unit circle where defined.  Spectral factors W (with Phi = W* W) are
compared through exact symbolic equality; stochastic minimality means the
McMillan degree of W is half that of Phi.  ``uniqueness_check`` evaluates
the hypotheses of the uniqueness statement for two candidate factors and
prescribed pole/zero regions, and classifies the outcome: a failed
hypothesis, a constant orthogonal transfer (the expected outcome), or a
non-constant transfer despite all hypotheses holding, which would indicate
a defect in this implementation and is surfaced loudly.

Exactness note: the only floating-point computation in the package is
``psd_on_circle``, an advisory sampling check.  Generators guarantee
positive semidefiniteness structurally (Phi is built as W* W).
"""

from __future__ import annotations

import cmath
import enum
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .allpass import is_paraunitary, make_elementary
from .errors import (
    CoSpectralityError,
    DimensionMismatchError,
    GenerationError,
    MinimalInverseError,
    RankDeficiencyError,
    ScalarParseError,
    SpectrumError,
)
from .linsolve import matrix_rank
from .ratfun import RatFun
from .ratmat import RatMat
from .poly import Poly
from .scalars import Comparison, GaussianRational, INFINITY, Point


class Side(enum.Enum):
    OUTER = "outer"
    INNER = "inner"


def _canonical_pair_rep(p: Point) -> Point:
    """The member of the reciprocal pair with modulus above 1 (infinity for
    the pair {0, infinity})."""
    return p if p.abs_vs_one() is Comparison.GREATER else p.symplectic_pair()


class Region:
    """Pole/zero placement region compatible with reciprocal-pair symmetry."""

    __slots__ = ("_default_side", "_flipped", "_weak")

    def __init__(self, default_side: Side, flipped=(), weak: bool = False):
        if not isinstance(default_side, Side):
            raise TypeError("default_side must be a Side")
        canon = set()
        for point in flipped:
            if not isinstance(point, Point):
                point = Point(point)
            if point.abs_vs_one() is Comparison.EQUAL:
                raise ValueError(f"flipped point on the unit circle: {point}")
            canon.add(_canonical_pair_rep(point))
        self._default_side = default_side
        self._flipped = frozenset(canon)
        self._weak = bool(weak)

    @property
    def default_side(self) -> Side:
        return self._default_side

    @property
    def flipped(self) -> frozenset[Point]:
        return self._flipped

    @property
    def weak(self) -> bool:
        return self._weak

    def contains(self, p: Point) -> bool:
        cmp = p.abs_vs_one()
        if cmp is Comparison.EQUAL:
            return self._weak
        on_default = (cmp is Comparison.GREATER) == (self._default_side is Side.OUTER)
        if _canonical_pair_rep(p) in self._flipped:
            return not on_default
        return on_default

    @classmethod
    def parse(cls, text: str) -> Region:
        """Grammar: ``outer|inner[,flip=p1;p2,...][,weak]``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ScalarParseError("empty region specification")
        side_token = parts[0].lower()
        if side_token == "outer":
            side = Side.OUTER
        elif side_token == "inner":
            side = Side.INNER
        else:
            raise ScalarParseError(f"region side must be outer or inner, got {parts[0]!r}")
        flips: list[Point] = []
        weak = False
        for token in parts[1:]:
            low = token.lower()
            if low == "weak":
                weak = True
            elif low.startswith("flip="):
                for ptext in token[5:].split(";"):
                    if ptext.strip():
                        flips.append(Point.from_string(ptext))
            else:
                raise ScalarParseError(f"unknown region clause {token!r}")
        return cls(side, flips, weak)

    def spec_string(self) -> str:
        parts = [self._default_side.value]
        if self._flipped:
            pts = sorted(
                self._flipped,
                key=lambda p: (1, Fraction(0), Fraction(0), Fraction(0))
                if p.is_infinite
                else (0, p.value.abs2(), p.value.re, p.value.im),
            )
            parts.append("flip=" + ";".join(str(p) for p in pts))
        if self._weak:
            parts.append("weak")
        return ",".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return (
            self._default_side is other._default_side
            and self._flipped == other._flipped
            and self._weak == other._weak
        )

    def __hash__(self):
        return hash((self._default_side, self._flipped, self._weak))

    def __repr__(self) -> str:
        return f"Region({self.spec_string()!r})"


def region_contains(region: Region, p: Point) -> bool:
    return region.contains(p)


class Spectrum:
    """Real para-Hermitian rational matrix with even McMillan degree.

    The exact invariants (realness, para-Hermitian symmetry, even degree)
    are enforced at construction.  Positive semidefiniteness on the circle
    cannot be decided exactly by sampling and is left to the advisory
    ``psd_on_circle`` check; generator-built spectra are Gram products and
    therefore positive semidefinite structurally.
    """

    __slots__ = ("_phi",)

    def __init__(self, phi: RatMat):
        if not phi.is_square():
            raise SpectrumError("a spectrum must be square")
        if not phi.has_real_coeffs():
            raise SpectrumError("a spectrum must have real coefficients")
        if phi != phi.paraconj_transpose():
            raise SpectrumError("a spectrum must be para-Hermitian")
        if phi.is_zero():
            raise SpectrumError("the zero matrix is not a spectrum")
        if phi.mcmillan_degree() % 2:
            raise SpectrumError("spectrum has odd McMillan degree; no factor can exist")
        self._phi = phi

    @property
    def phi(self) -> RatMat:
        return self._phi

    @property
    def size(self) -> int:
        return self._phi.rows

    def rank(self) -> int:
        return self._phi.normal_rank()

    def mcmillan_degree(self) -> int:
        return self._phi.mcmillan_degree()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self._phi == other._phi

    def __repr__(self) -> str:
        return f"Spectrum({self._phi!r})"


def analytic_in(g: RatMat, region: Region) -> bool:
    """True when no pole of g (infinity included) lies in the region."""
    for p in g.finite_pole_points(strict=True):
        if region.contains(p):
            return False
    if g.has_pole_at_infinity() and region.contains(INFINITY):
        return False
    return True


def is_spectral_factor(w: RatMat, spectrum: Spectrum) -> bool:
    if w.cols != spectrum.size:
        raise DimensionMismatchError(
            f"factor has {w.cols} columns, spectrum has size {spectrum.size}"
        )
    return w.paraconj_transpose() * w == spectrum.phi


def is_stochastically_minimal(w: RatMat, spectrum: Spectrum) -> bool:
    if not is_spectral_factor(w, spectrum):
        raise SpectrumError("not a spectral factor of the given spectrum")
    return 2 * w.mcmillan_degree() == spectrum.mcmillan_degree()


@dataclass(frozen=True)
class PsdReport:
    ok: bool
    evaluated: int
    skipped: int
    min_eigenvalue: float | None

    def __bool__(self) -> bool:
        return self.ok


def psd_on_circle(spectrum, samples: int = 64, tol: float = 1e-9) -> PsdReport:
    """Advisory floating-point check of positive semidefiniteness on the
    unit circle; samples falling on poles are skipped and counted."""
    phi = spectrum.phi if isinstance(spectrum, Spectrum) else spectrum
    if samples < 1:
        raise ValueError("need at least one sample")
    evaluated = 0
    skipped = 0
    min_eig: float | None = None
    ok = True
    for k in range(samples):
        z = cmath.exp(2j * cmath.pi * k / samples)
        try:
            dens = [abs(e.den.eval_complex(z)) for row in phi.entries for e in row]
            nums = [abs(e.num.eval_complex(z)) for row in phi.entries for e in row]
        except OverflowError:
            skipped += 1
            continue
        scale = max(max(nums, default=0.0), 1.0)
        if min(dens) < 1e-12 * scale:
            skipped += 1
            continue
        a = np.array(phi.eval_complex(z), dtype=complex)
        herm = (a + a.conj().T) / 2
        lo = float(np.linalg.eigvalsh(herm)[0])
        evaluated += 1
        min_eig = lo if min_eig is None else min(min_eig, lo)
        if lo < -tol:
            ok = False
    return PsdReport(ok=ok, evaluated=evaluated, skipped=skipped, min_eigenvalue=min_eig)


def transfer_between(w1: RatMat, w: RatMat) -> RatMat:
    """The para-unitary transfer T with W1 = T W, computed as W1 times a
    minimal right inverse of W.  Raises when the inputs are not exact
    co-spectral factors."""
    if w1.rows != w.rows or w1.cols != w.cols:
        raise DimensionMismatchError("factors must share dimensions")
    if w.normal_rank() != w.rows or w1.normal_rank() != w1.rows:
        raise RankDeficiencyError("transfer needs full row rank factors")
    t = w1 * w.minimal_right_inverse()
    if not is_paraunitary(t):
        raise CoSpectralityError("transfer is not para-unitary; factors are not co-spectral")
    if w1 != t * w:
        raise CoSpectralityError("transfer does not reproduce the first factor exactly")
    return t


class Verdict(enum.Enum):
    UNIQUE = "UNIQUE"
    HYPOTHESIS_FAILED = "HYPOTHESIS_FAILED"
    UNIQUENESS_VIOLATED = "UNIQUENESS_VIOLATED"


@dataclass(frozen=True)
class UniquenessResult:
    verdict: Verdict
    failed_hypotheses: tuple[str, ...]
    transfer: RatMat | None


def _constant_real_orthogonal(t: RatMat) -> bool:
    if not t.is_constant() or not t.has_real_coeffs():
        return False
    vals = t.constant_values()
    n = t.rows
    for i in range(n):
        for j in range(n):
            acc = GaussianRational(0)
            for k in range(n):
                acc = acc + vals[k][i] * vals[k][j]
            expected = GaussianRational(1 if i == j else 0)
            if acc != expected:
                return False
    return True


def uniqueness_check(
    w: RatMat, w1: RatMat, region_p: Region, region_z: Region
) -> UniquenessResult:
    """Evaluate the uniqueness hypotheses for two candidate factors.

    Checks, exactly: real coefficients, full row rank, co-spectrality
    (W* W equal to W1* W1), analyticity of both factors in the pole region
    and of their minimal right inverses in the zero region, and stochastic
    minimality of both.  When every hypothesis holds the transfer W1 W^-R
    is computed; a constant real orthogonal transfer yields UNIQUE, and a
    non-constant one yields UNIQUENESS_VIOLATED, which only a defect in
    this package can produce.
    """
    if w.rows != w1.rows or w.cols != w1.cols:
        raise DimensionMismatchError("candidate factors must share dimensions")
    failed: list[str] = []
    if not (w.has_real_coeffs() and w1.has_real_coeffs()):
        failed.append("real_coefficients")
    r = w.rows
    full_rank = w.normal_rank() == r and w1.normal_rank() == r
    if not full_rank:
        failed.append("full_row_rank")
    phi = w.paraconj_transpose() * w
    phi1 = w1.paraconj_transpose() * w1
    co_spectral = phi == phi1
    if not co_spectral:
        failed.append("co_spectrality")
    if not analytic_in(w, region_p):
        failed.append("analyticity_W")
    if not analytic_in(w1, region_p):
        failed.append("analyticity_W1")
    w_inv = None
    if full_rank:
        try:
            w_inv = w.minimal_right_inverse()
            if not analytic_in(w_inv, region_z):
                failed.append("analyticity_W_inverse")
        except MinimalInverseError:
            failed.append("analyticity_W_inverse")
        try:
            if not analytic_in(w1.minimal_right_inverse(), region_z):
                failed.append("analyticity_W1_inverse")
        except MinimalInverseError:
            failed.append("analyticity_W1_inverse")
        phi_degree = phi.mcmillan_degree()
        if 2 * w.mcmillan_degree() != phi_degree:
            failed.append("minimality_W")
        if 2 * w1.mcmillan_degree() != phi1.mcmillan_degree():
            failed.append("minimality_W1")
    if failed:
        return UniquenessResult(Verdict.HYPOTHESIS_FAILED, tuple(failed), None)
    t = w1 * w_inv
    if not is_paraunitary(t) or w1 != t * w:
        raise CoSpectralityError("exact co-spectrality holds but the transfer misbehaves")
    if _constant_real_orthogonal(t):
        return UniquenessResult(Verdict.UNIQUE, (), t)
    return UniquenessResult(Verdict.UNIQUENESS_VIOLATED, (), t)


# -- instance generation -----------------------------------------------------------


class _RetryDraw(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _draw_real_outside(rng: random.Random, region: Region) -> Point:
    for _ in range(64):
        num = rng.randint(-9, 9)
        den = rng.randint(1, 9)
        if num == 0:
            continue
        x = Fraction(num, den)
        if abs(x) == 1:
            continue
        p = Point(GaussianRational(x))
        if not region.contains(p):
            return p
        q = p.symplectic_pair()
        if not q.is_infinite and not region.contains(q):
            return q
    raise _RetryDraw("could not draw a real point outside the region")


def _draw_conjugate_pair_outside(rng: random.Random, region: Region) -> tuple[Point, Point]:
    for _ in range(64):
        den = rng.randint(1, 5)
        a = Fraction(rng.randint(-5, 5), den)
        b = Fraction(rng.randint(1, 5), den)
        w = GaussianRational(a, b)
        if w.abs2() == 1:
            continue
        p = Point(w)
        if region.contains(p):
            p = p.symplectic_pair()
            if p.is_infinite or region.contains(p):
                continue
        q = p.conj()
        if region.contains(q):
            continue
        return p, q
    raise _RetryDraw("could not draw a conjugate pair outside the region")


def _atom_sizes(rng: random.Random, total: int) -> list[int]:
    sizes = []
    remaining = total
    while remaining:
        if remaining >= 2 and rng.random() < 0.35:
            sizes.append(2)
            remaining -= 2
        else:
            sizes.append(1)
            remaining -= 1
    return sizes


def _draw_full_rank_constant(rng: random.Random, rows: int, cols: int) -> RatMat:
    for _ in range(64):
        grid = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        gr = [[GaussianRational(x) for x in row] for row in grid]
        if matrix_rank(gr) == rows:
            return RatMat(grid)
    raise _RetryDraw("could not draw a full row rank constant matrix")


def generate_instance(
    seed: int,
    size: tuple[int, int],
    degree: int,
    region_p: Region,
    region_z: Region,
    max_retries: int = 60,
) -> tuple[Spectrum, RatMat]:
    """Deterministically build a spectrum and a stochastically minimal
    spectral factor with poles outside the pole region and zeros outside
    the zero region.

    The factor is D M with D a diagonal of real rational functions (poles
    and zeros drawn from the region complements, conjugate-closed, chosen
    so no reciprocal pairing collapses degrees) and M a constant real full
    row rank matrix.  All four defining properties are re-verified exactly;
    degenerate draws are retried with fresh randomness.
    """
    r, n = size
    if not (1 <= r <= n):
        raise ValueError("need 1 <= rows <= cols")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    rng = random.Random(seed)
    reasons: list[str] = []
    for _ in range(max_retries):
        try:
            sizes = _atom_sizes(rng, degree)
            pole_atoms: list[tuple[Point, ...]] = []
            zero_atoms: list[tuple[Point, ...]] = []
            for s in sizes:
                if s == 1:
                    pole_atoms.append((_draw_real_outside(rng, region_p),))
                    zero_atoms.append((_draw_real_outside(rng, region_z),))
                else:
                    pole_atoms.append(_draw_conjugate_pair_outside(rng, region_p))
                    zero_atoms.append(_draw_conjugate_pair_outside(rng, region_z))
            poles = [p for atom in pole_atoms for p in atom]
            zeros = [z for atom in zero_atoms for z in atom]
            pole_set = set(poles)
            zero_set = set(zeros)
            if len(pole_set) != len(poles) or len(zero_set) != len(zeros):
                raise _RetryDraw("repeated drawn point")
            if pole_set & zero_set:
                raise _RetryDraw(f"pole/zero collision at {pole_set & zero_set}")
            recip_poles = {p.symplectic_pair() for p in pole_set}
            if recip_poles & zero_set:
                raise _RetryDraw(
                    f"reciprocal pairing collapse at {recip_poles & zero_set}"
                )
            num_polys = [Poly.one() for _ in range(r)]
            den_polys = [Poly.one() for _ in range(r)]
            for pole_atom, zero_atom in zip(pole_atoms, zero_atoms):
                slot = rng.randrange(r)
                for p in pole_atom:
                    den_polys[slot] = den_polys[slot] * Poly.linear(p.value)
                for z in zero_atom:
                    num_polys[slot] = num_polys[slot] * Poly.linear(z.value)
            diag = [RatFun(nm, dn) for nm, dn in zip(num_polys, den_polys)]
            d_mat = RatMat.diagonal(diag)
            m_mat = _draw_full_rank_constant(rng, r, n)
            w = d_mat * m_mat
            if not w.has_real_coeffs():
                raise _RetryDraw("factor picked up complex coefficients")
            phi = w.paraconj_transpose() * w
            spectrum = Spectrum(phi)
            if not is_spectral_factor(w, spectrum):
                raise _RetryDraw("factor identity failed")
            if not analytic_in(w, region_p):
                raise _RetryDraw("factor not analytic in the pole region")
            if not analytic_in(w.minimal_right_inverse(), region_z):
                raise _RetryDraw("right inverse not analytic in the zero region")
            if not is_stochastically_minimal(w, spectrum):
                raise _RetryDraw("factor degree is not half the spectrum degree")
            return spectrum, w
        except _RetryDraw as exc:
            reasons.append(exc.reason)
            continue
    raise GenerationError(
        f"instance generation failed after {max_retries} attempts: {reasons[-3:]}"
    )


def perturb_with_allpass(w: RatMat, poles, directions=None) -> RatMat:
    """Left multiply by elementary all-pass factors at the given poles.

    The result is co-spectral with w; generically it violates minimality
    or one of the analyticity constraints, which is exactly what the
    negative branches of the uniqueness harness need.  With an empty pole
    list w is returned unchanged.
    """
    r = w.rows
    acc: RatMat | None = None
    poles = list(poles)
    if directions is None:
        directions = [None] * len(poles)
    for pole, direction in zip(poles, directions):
        if direction is None:
            direction = [1] + [0] * (r - 1)
        u = make_elementary(pole if isinstance(pole, Point) else Point(pole), direction)
        acc = u if acc is None else acc * u
    if acc is None:
        return w
    return acc * w


# -- seeded sweep ------------------------------------------------------------------


def default_geometries() -> list[dict]:
    """Named region geometries used by the sweep: classical equal regions,
    disjoint flips, and weak variants."""
    return [
        {
            "name": "classical_outer",
            "region_p": Region(Side.OUTER),
            "region_z": Region(Side.OUTER),
            "allpass_pole": Point(Fraction(1, 3)),
        },
        {
            "name": "flipped_disjoint",
            "region_p": Region(Side.OUTER, [Point(3)]),
            "region_z": Region(Side.OUTER, [Point(5)]),
            "allpass_pole": Point(3),
        },
        {
            "name": "weak_inner",
            "region_p": Region(Side.INNER, weak=True),
            "region_z": Region(Side.INNER, weak=True),
            "allpass_pole": Point(4),
        },
        {
            "name": "weak_flipped",
            "region_p": Region(Side.OUTER, [Point(2)], weak=True),
            "region_z": Region(Side.OUTER, [Point(Fraction(7, 2))], weak=True),
            "allpass_pole": Point(2),
        },
    ]


_SWEEP_SIZES = [
    ((1, 1), 1),
    ((1, 2), 2),
    ((2, 2), 2),
    ((2, 3), 3),
    ((1, 2), 1),
    ((2, 2), 1),
]


def _orthogonal_pool(r: int) -> list[RatMat]:
    if r == 1:
        return [RatMat([[1]]), RatMat([[-1]])]
    if r == 2:
        h = Fraction(3, 5)
        s = Fraction(4, 5)
        return [
            RatMat([[1, 0], [0, 1]]),
            RatMat([[0, 1], [1, 0]]),
            RatMat([[1, 0], [0, -1]]),
            RatMat([[-1, 0], [0, -1]]),
            RatMat([[h, s], [-s, h]]),
            RatMat([[Fraction(5, 13), Fraction(12, 13)], [-Fraction(12, 13), Fraction(5, 13)]]),
        ]
    pool = []
    base = _orthogonal_pool(2)
    for b in base:
        vals = b.entries
        pool.append(
            RatMat(
                [
                    [vals[0][0], vals[0][1], RatFun.zero()],
                    [vals[1][0], vals[1][1], RatFun.zero()],
                    [RatFun.zero(), RatFun.zero(), RatFun.one()],
                ]
            )
        )
    pool.append(RatMat([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    pool.append(RatMat([[0, 0, -1], [0, 1, 0], [1, 0, 0]]))
    return pool


def run_sweep(instances: int, base_seed: int = 20240) -> dict:
    """Seeded end-to-end sweep over region geometries.

    For every generated instance the orthogonal-multiple case must come
    back UNIQUE with the exact transfer, and the all-pass perturbed case
    must fail a named hypothesis.  The report is keyed by seed and fully
    deterministic for a given (instances, base_seed) pair.
    """
    geometries = default_geometries()
    records = []
    summary = {
        "unique": 0,
        "hypothesis_failed": 0,
        "uniqueness_violated": 0,
        "transfer_mismatches": 0,
    }
    for idx in range(instances):
        seed = base_seed + idx
        geo = geometries[idx % len(geometries)]
        (size, degree) = _SWEEP_SIZES[idx % len(_SWEEP_SIZES)]
        region_p = geo["region_p"]
        region_z = geo["region_z"]
        spectrum, w = generate_instance(seed, size, degree, region_p, region_z)
        rng = random.Random(seed ^ 0xA5A5A5)
        q = rng.choice(_orthogonal_pool(size[0]))
        res_orth = uniqueness_check(w, q * w, region_p, region_z)
        transfer_exact = res_orth.transfer == q if res_orth.transfer is not None else False
        perturbed = perturb_with_allpass(w, [geo["allpass_pole"]])
        res_pert = uniqueness_check(w, perturbed, region_p, region_z)
        for res in (res_orth, res_pert):
            if res.verdict is Verdict.UNIQUE:
                summary["unique"] += 1
            elif res.verdict is Verdict.HYPOTHESIS_FAILED:
                summary["hypothesis_failed"] += 1
            else:
                summary["uniqueness_violated"] += 1
        if not transfer_exact:
            summary["transfer_mismatches"] += 1
        records.append(
            {
                "seed": seed,
                "geometry": geo["name"],
                "weak_regions": [region_p.weak, region_z.weak],
                "size": list(size),
                "degree": degree,
                "spectrum_degree": spectrum.mcmillan_degree(),
                "orthogonal_case": {
                    "verdict": res_orth.verdict.value,
                    "failed_hypotheses": list(res_orth.failed_hypotheses),
                    "transfer_matches": transfer_exact,
                },
                "allpass_case": {
                    "verdict": res_pert.verdict.value,
                    "failed_hypotheses": list(res_pert.failed_hypotheses),
                },
            }
        )
    records.sort(key=lambda rec: rec["seed"])
    return {
        "schema_version": "1",
        "base_seed": base_seed,
        "instances": records,
        "summary": summary,
    }
