"""Para-unitary (all-pass) rational matrices.

An elementary factor is U(z) = I + (b(z) - 1) P with b the Blaschke kernel
for a pole off the unit circle and P a rank-one orthogonal projection.  The
projection is stored through an unnormalized direction vector v (P equals
v v* / (v* v)), which keeps every coefficient inside Q(i); unit-norm
normalization would need square roots.

``potapov_factorize`` peels a para-unitary matrix into a constant unitary
times elementary factors, one per unit of McMillan degree.  The peel order
is fixed (poles ascending by squared modulus, then lexicographically by
real and imaginary part, infinity last; direction from the first usable
column of the Laurent leading coefficient, cleared to a primitive Gaussian
integer vector), so factorizations are reproducible byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import DimensionMismatchError, FactorizationError
from .poly import Poly
from .ratfun import RatFun, blaschke
from .ratmat import RatMat, point_degrees_by_valuation
from .scalars import Comparison, GaussianRational, INFINITY, Point, ONE, ZERO


def _canonical_direction(v) -> tuple[GaussianRational, ...]:
    """Primitive Gaussian-integer representative of the ray through v."""
    vec = [x if isinstance(x, GaussianRational) else GaussianRational(x) for x in v]
    if all(x.is_zero() for x in vec):
        raise ValueError("projection direction must be nonzero")
    denom = 1
    for x in vec:
        for part in (x.re, x.im):
            denom = denom * part.denominator // int_gcd(denom, part.denominator)
    ints = [(int(x.re * denom), int(x.im * denom)) for x in vec]
    content = 0
    for a, b in ints:
        content = int_gcd(content, int_gcd(abs(a), abs(b)))
    ints = [(a // content, b // content) for a, b in ints]
    # rotate by a unit so the first nonzero entry has positive real part
    first = next((a, b) for a, b in ints if a or b)
    if first[0] > 0:
        unit = (1, 0)
    elif first[0] < 0:
        unit = (-1, 0)
    elif first[1] > 0:
        unit = (0, -1)
    else:
        unit = (0, 1)
    ua, ub = unit
    rotated = [(a * ua - b * ub, a * ub + b * ua) for a, b in ints]
    return tuple(GaussianRational(a, b) for a, b in rotated)


class ElementaryFactor:
    """Degree-one all-pass building block: pole location and direction vector."""

    __slots__ = ("_alpha", "_v")

    def __init__(self, alpha: Point, v):
        if not isinstance(alpha, Point):
            alpha = Point(alpha)
        if alpha.abs_vs_one() is Comparison.EQUAL:
            raise ValueError(f"elementary factor pole on the unit circle: {alpha}")
        self._alpha = alpha
        self._v = _canonical_direction(v)

    @property
    def alpha(self) -> Point:
        return self._alpha

    @property
    def v(self) -> tuple[GaussianRational, ...]:
        return self._v

    @property
    def dimension(self) -> int:
        return len(self._v)

    def projection(self) -> list[list[GaussianRational]]:
        """The rank-one orthogonal projection v v* / (v* v); idempotent and
        Hermitian by construction."""
        norm = GaussianRational(0)
        for x in self._v:
            norm = norm + x * x.conj()
        inv = norm.inverse()
        return [[vi * vj.conj() * inv for vj in self._v] for vi in self._v]

    def matrix(self) -> RatMat:
        b = blaschke(self._alpha)
        shift = b - RatFun.one()
        p = self.projection()
        n = len(self._v)
        entries = []
        for i in range(n):
            row = []
            for j in range(n):
                base = RatFun.one() if i == j else RatFun.zero()
                row.append(base + shift * RatFun.constant(p[i][j]))
            entries.append(row)
        return RatMat(entries)

    def determinant(self) -> RatFun:
        return blaschke(self._alpha)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementaryFactor):
            return NotImplemented
        return self._alpha == other._alpha and self._v == other._v

    def __hash__(self):
        return hash((self._alpha, self._v))

    def __repr__(self) -> str:
        vs = ", ".join(str(x) for x in self._v)
        return f"ElementaryFactor(alpha={self._alpha}, v=[{vs}])"


class AllPassFactorization:
    """Constant unitary times an ordered product of elementary factors."""

    __slots__ = ("_constant", "_factors")

    def __init__(self, constant: RatMat, factors):
        if not constant.is_constant():
            raise ValueError("leading matrix of a factorization must be constant")
        if not _constant_unitary(constant):
            raise ValueError("leading matrix of a factorization must be unitary")
        self._constant = constant
        self._factors = tuple(factors)
        for f in self._factors:
            if f.dimension != constant.rows:
                raise DimensionMismatchError("factor dimension mismatch")

    @property
    def constant(self) -> RatMat:
        return self._constant

    @property
    def factors(self) -> tuple[ElementaryFactor, ...]:
        return self._factors

    def product(self) -> RatMat:
        acc = self._constant
        for f in self._factors:
            acc = acc * f.matrix()
        return acc

    def pole_points(self) -> tuple[Point, ...]:
        return tuple(f.alpha for f in self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def __repr__(self) -> str:
        return f"AllPassFactorization({len(self._factors)} factors)"


def make_elementary(alpha, v) -> RatMat:
    """The matrix I + (b(z) - 1) v v* / (v* v); para-unitary by construction."""
    return ElementaryFactor(alpha if isinstance(alpha, Point) else Point(alpha), v).matrix()


def is_paraunitary(v: RatMat) -> bool:
    """Exact check of both products V* V and V V* against the identity."""
    if not v.is_square():
        raise DimensionMismatchError("para-unitarity is defined for square matrices")
    ident = RatMat.identity(v.rows)
    star = v.paraconj_transpose()
    return star * v == ident and v * star == ident


def is_parahermitian(g: RatMat) -> bool:
    if not g.is_square():
        raise DimensionMismatchError("para-Hermitian symmetry is defined for square matrices")
    return g == g.paraconj_transpose()


def degree_of_factorization(f: AllPassFactorization) -> int:
    """Number of elementary factors; equals the McMillan degree of the product."""
    return len(f.factors)


def _constant_unitary(c: RatMat) -> bool:
    if not c.is_square() or not c.is_constant():
        return False
    vals = c.constant_values()
    n = c.rows
    for i in range(n):
        for j in range(n):
            acc = GaussianRational(0)
            for k in range(n):
                acc = acc + vals[k][i].conj() * vals[k][j]
            if acc != (ONE if i == j else ZERO):
                return False
    return True


def _pole_sort_key(p: Point):
    if p.is_infinite:
        return (1, Fraction(0), Fraction(0), Fraction(0))
    val = p.value
    return (0, val.abs2(), val.re, val.im)


def _poles_of(v: RatMat) -> list[Point]:
    pts = list(v.finite_pole_points(strict=True))
    if v.has_pole_at_infinity():
        pts.append(INFINITY)
    pts.sort(key=_pole_sort_key)
    return pts


def _laurent_leading(v: RatMat, pole: Point) -> list[list[GaussianRational]]:
    """Leading coefficient matrix of the expansion of V at the pole."""
    if pole.is_infinite:
        orders = [
            [int(e.num.degree - e.den.degree) if not e.is_zero() else None for e in row]
            for row in v.entries
        ]
        m = max(o for row in orders for o in row if o is not None)
        out = []
        for row, orow in zip(v.entries, orders):
            out.append(
                [
                    e.num.lead / e.den.lead if o == m else ZERO
                    for e, o in zip(row, orow)
                ]
            )
        return out
    alpha = pole.value
    m = 0
    for row in v.entries:
        for e in row:
            if not e.is_zero():
                m = max(m, -e.valuation(pole))
    factor = RatFun(Poly.linear(alpha)) ** m
    return [[(e * factor).eval(alpha) if not e.is_zero() else ZERO for e in row] for row in v.entries]


def potapov_factorize(v: RatMat) -> AllPassFactorization:
    """Minimal decomposition of a para-unitary matrix into elementary factors.

    Iteratively peels the smallest pole: the direction is taken from the
    first column of the Laurent leading coefficient whose peel lowers the
    McMillan degree by exactly one.  The constant unitary tail is commuted
    to the front (conjugating each stored direction), so that
    constant * product(factors) reproduces the input exactly.
    """
    if not is_paraunitary(v):
        raise ValueError("input is not para-unitary")
    size = v.rows
    work = v
    peeled: list[tuple[Point, tuple[GaussianRational, ...]]] = []
    degree = work.mcmillan_degree()
    while degree > 0:
        poles = _poles_of(work)
        if not poles:
            raise FactorizationError("positive McMillan degree but no enumerable pole")
        pole = poles[0]
        partner = pole.conj_pair()
        # an elementary peel changes pole degrees only at the pole and its
        # conjugate-reciprocal partner, so the total degree drops by one
        # exactly when the degree at the pole drops and the partner holds
        dp_pole = point_degrees_by_valuation(work, pole)[1]
        dp_partner = point_degrees_by_valuation(work, partner)[1]
        leading = _laurent_leading(work, pole)
        accepted = False
        for col in range(size):
            column = [leading[i][col] for i in range(size)]
            if all(x.is_zero() for x in column):
                continue
            factor = ElementaryFactor(pole, column)
            candidate = factor.matrix().paraconj_transpose() * work
            if (
                point_degrees_by_valuation(candidate, pole)[1] == dp_pole - 1
                and point_degrees_by_valuation(candidate, partner)[1] == dp_partner
            ):
                peeled.append((pole, factor.v))
                work = candidate
                degree -= 1
                accepted = True
                break
        if not accepted:
            raise FactorizationError(
                f"no leading-coefficient column at {pole} lowers the degree"
            )
    if not work.is_constant():
        raise FactorizationError("degree zero remainder is not constant")
    constant = work
    if not _constant_unitary(constant):
        raise FactorizationError("constant remainder fails the exact unitarity check")
    cvals = constant.constant_values()
    factors = []
    for pole, direction in peeled:
        conjugated = [
            sum((cvals[j][k].conj() * direction[j] for j in range(size)), GaussianRational(0))
            for k in range(size)
        ]
        factors.append(ElementaryFactor(pole, conjugated))
    return AllPassFactorization(constant, factors)
