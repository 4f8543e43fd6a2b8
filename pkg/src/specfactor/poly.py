"""Exact univariate polynomials over the Gaussian rationals.

Coefficients are stored ascending by power of z with a nonzero leading
coefficient; the zero polynomial is the empty tuple and has degree -inf.
Division, gcd and multiplicity extraction are exact; root finding is
restricted to roots in Q(i) and reports the unsplit cofactor.

Polynomials are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd, inf

from .errors import NonGaussianPoleError
from .gaussint import (
    UNITS,
    canonical_associate,
    gi_divisors_up_to_units,
    gi_exact_div,
    gi_gcd,
    gi_mul,
)
from .scalars import GaussianRational, Point, ONE, ZERO

NEG_INF = -inf


def _coerce_scalar(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


class Poly:
    """Immutable polynomial in one variable over Q(i)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, GaussianRational) else GaussianRational(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return _ZERO

    @classmethod
    def one(cls) -> Poly:
        return _ONE

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def variable(cls) -> Poly:
        return _Z

    @classmethod
    def linear(cls, root) -> Poly:
        """The monic factor z - root."""
        r = root if isinstance(root, GaussianRational) else GaussianRational(root)
        return cls((-r, ONE))

    @classmethod
    def from_roots(cls, roots) -> Poly:
        p = _ONE
        for r in roots:
            p = p * cls.linear(r)
        return p

    @property
    def coeffs(self) -> tuple[GaussianRational, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int; -inf for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def lead(self) -> GaussianRational:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def is_one(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0].is_one()

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1].is_one()

    def coefficient(self, k: int) -> GaussianRational:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else ZERO

    def __add__(self, other):
        if isinstance(other, Poly):
            n = max(len(self._coeffs), len(other._coeffs))
            return Poly(
                [self.coefficient(k) + other.coefficient(k) for k in range(n)]
            )
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return self + Poly((s,))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Poly):
            n = max(len(self._coeffs), len(other._coeffs))
            return Poly(
                [self.coefficient(k) - other.coefficient(k) for k in range(n)]
            )
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return self - Poly((s,))

    def __rsub__(self, other):
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return Poly((s,)) - self

    def __neg__(self) -> Poly:
        return Poly([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self._coeffs or not other._coeffs:
                return _ZERO
            out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        if s.is_zero():
            return _ZERO
        return Poly([c * s for c in self._coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = len(self._coeffs) - len(other._coeffs)
        if dq < 0:
            return _ZERO, self
        quot = [ZERO] * (dq + 1)
        inv_lead = other.lead.inverse()
        dn = len(other._coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[dn + k] * inv_lead
            quot[k] = c
            if not c.is_zero():
                for j, b in enumerate(other._coeffs):
                    rem[j + k] = rem[j + k] - c * b
        return Poly(quot), Poly(rem[:dn])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        """Quotient asserting zero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact polynomial division: {self} by {other}")
        return q

    def monic(self) -> Poly:
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self * self.lead.inverse()

    def eval(self, alpha) -> GaussianRational:
        """Exact Horner evaluation."""
        a = alpha if isinstance(alpha, GaussianRational) else GaussianRational(alpha)
        acc = ZERO
        for c in reversed(self._coeffs):
            acc = acc * a + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self._coeffs):
            acc = acc * z + c.to_complex()
        return acc

    def multiplicity(self, point: Point) -> int:
        """Largest k with (z - point)^k dividing self; 0 for the point at infinity."""
        if self.is_zero():
            raise ValueError("multiplicity of a root in the zero polynomial")
        if point.is_infinite:
            return 0
        alpha = point.value
        factor = Poly.linear(alpha)
        count = 0
        p = self
        while not p.is_constant():
            q, r = divmod(p, factor)
            if not r.is_zero():
                break
            count += 1
            p = q
        return count

    def reversed(self) -> Poly:
        """Coefficient reversal z**deg * p(1/z)."""
        return Poly(tuple(reversed(self._coeffs)))

    def conj_coeffs(self) -> Poly:
        return Poly([c.conj() for c in self._coeffs])

    def has_real_coeffs(self) -> bool:
        return all(c.is_real() for c in self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return self == Poly((s,))

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                terms.append(f"({c})")
            elif k == 1:
                terms.append("z" if c.is_one() else f"({c})*z")
            else:
                terms.append(f"z^{k}" if c.is_one() else f"({c})*z^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly[{self}]"


_ZERO = Poly(())
_ONE = Poly((ONE,))
_Z = Poly((ZERO, ONE))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor.

    Runs the subresultant pseudo-remainder sequence over Z[i]: remainders
    are divided by predicted scalar factors (exact divisions, no content
    gcds in the loop), so all intermediate arithmetic stays in integers
    with controlled growth.  The result is normalized monic over Q(i).
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return _ONE
    a = _primitive_gi(p)
    b = _primitive_gi(q)
    if len(a) < len(b):
        a, b = b, a
    g = (1, 0)
    h = (1, 0)
    while True:
        delta = len(a) - len(b)
        r = _gi_prem(a, b)
        if not r:
            break
        if len(r) == 1:
            return _ONE
        divisor = gi_mul(g, _gi_pow(h, delta))
        r = [gi_exact_div(c, divisor) if c != (0, 0) else (0, 0) for c in r]
        if any(c is None for c in r):
            raise AssertionError("subresultant division failed")
        a, b = b, r
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = gi_exact_div(_gi_pow(g, delta), _gi_pow(h, delta - 1))
            if h is None:
                raise AssertionError("subresultant h-update failed")
    b = _strip_gi_content(b)
    return Poly([GaussianRational(Fraction(c[0]), Fraction(c[1])) for c in b]).monic()


def _gi_pow(x: tuple[int, int], n: int) -> tuple[int, int]:
    out = (1, 0)
    base = x
    while n:
        if n & 1:
            out = gi_mul(out, base)
        base = gi_mul(base, base)
        n >>= 1
    return out


def _primitive_gi(p: Poly) -> list[tuple[int, int]]:
    """Content-free Z[i] coefficient list of a nonzero polynomial."""
    return _strip_gi_content(_to_gaussian_integers(p))


def _strip_gi_content(coeffs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    content = (0, 0)
    for c in coeffs:
        if c != (0, 0):
            content = gi_gcd(content, c)
    if content == (0, 0):
        return []
    out = []
    for c in coeffs:
        if c == (0, 0):
            out.append((0, 0))
        else:
            out.append(gi_exact_div(c, content))
    while out and out[-1] == (0, 0):
        out.pop()
    return out


def _gi_prem(a: list[tuple[int, int]], b: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Standardized pseudo-remainder over Z[i]: lead(b)**(da-db+1) * a mod b.

    The full power of lead(b) is applied even when intermediate
    cancellations skip reduction steps, as the subresultant divisor
    formulas assume the standardized scaling.
    """
    r = list(a)
    db = len(b) - 1
    lead_b = b[-1]
    steps = 0
    target = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lead_r = r[-1]
        shift = dr - db
        r = [gi_mul(c, lead_b) for c in r]
        for j in range(db + 1):
            prod = gi_mul(lead_r, b[j])
            tgt = r[j + shift]
            r[j + shift] = (tgt[0] - prod[0], tgt[1] - prod[1])
        while r and r[-1] == (0, 0):
            r.pop()
        steps += 1
    if r and steps < target:
        scale = _gi_pow(lead_b, target - steps)
        r = [gi_mul(c, scale) for c in r]
    return r


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        raise ValueError("lcm with the zero polynomial")
    return (p * q).exact_div(poly_gcd(p, q)).monic()


def _to_gaussian_integers(p: Poly) -> list[tuple[int, int]]:
    """Scale coefficients by the common denominator, returning Z[i] pairs."""
    denom = 1
    for c in p.coeffs:
        denom = denom * c.re.denominator // int_gcd(denom, c.re.denominator)
        denom = denom * c.im.denominator // int_gcd(denom, c.im.denominator)
    out = []
    for c in p.coeffs:
        re = c.re * denom
        im = c.im * denom
        out.append((int(re), int(im)))
    return out


@lru_cache(maxsize=4096)
def gaussian_roots(p: Poly) -> tuple[tuple[tuple[GaussianRational, int], ...], Poly]:
    """All roots of p in Q(i) with multiplicities, plus the unsplit cofactor.

    Candidates p/q are enumerated from Z[i] divisors of the trailing and
    leading coefficients after clearing denominators.  The returned data
    satisfies lead * prod (z - r)^m * cofactor == p exactly; the cofactor is
    monic (constant 1 when p splits over Q(i)).
    """
    if p.is_zero():
        raise ValueError("root extraction from the zero polynomial")
    roots: list[tuple[GaussianRational, int]] = []
    work = p.monic()
    # strip roots at the origin first so the trailing coefficient is nonzero
    zero_mult = 0
    while not work.is_constant() and work.coefficient(0).is_zero():
        work = work.exact_div(Poly.variable())
        zero_mult += 1
    if zero_mult:
        roots.append((ZERO, zero_mult))
    if not work.is_constant():
        ints = _to_gaussian_integers(work)
        trailing = ints[0]
        leading = ints[-1]
        seen: set[tuple[int, int, int, int]] = set()
        candidates: list[tuple[tuple[int, int], tuple[int, int]]] = []
        for den in gi_divisors_up_to_units(leading):
            for num in gi_divisors_up_to_units(trailing):
                g = gi_gcd(num, den)
                rnum = gi_exact_div(num, g)
                rden = canonical_associate(gi_exact_div(den, g))
                for unit in UNITS:
                    un = gi_mul(rnum, unit)
                    key = (un[0], un[1], rden[0], rden[1])
                    if key not in seen:
                        seen.add(key)
                        candidates.append((un, rden))
        for num, den in candidates:
            if work.is_constant():
                break
            if _homogeneous_eval(ints, num, den) != (0, 0):
                continue
            cand = GaussianRational(num[0], num[1]) / GaussianRational(den[0], den[1])
            factor = Poly.linear(cand)
            mult = 0
            while True:
                q, r = divmod(work, factor)
                if not r.is_zero():
                    break
                work = q
                mult += 1
            if mult:
                roots.append((cand, mult))
                ints = _to_gaussian_integers(work)
    return tuple(roots), work


def _homogeneous_eval(ints, p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
    """q**deg * poly(p/q) over Z[i]; zero exactly when p/q is a root."""
    acc = ints[-1]
    qpow = (1, 0)
    for k in range(len(ints) - 2, -1, -1):
        qpow = gi_mul(qpow, q)
        acc = gi_mul(acc, p)
        term = gi_mul(ints[k], qpow)
        acc = (acc[0] + term[0], acc[1] + term[1])
    return acc


def require_split(p: Poly, context: str = "") -> tuple[tuple[GaussianRational, int], ...]:
    """Roots of p requiring a complete split over Q(i)."""
    roots, cofactor = gaussian_roots(p)
    if not cofactor.is_constant():
        where = f" in {context}" if context else ""
        raise NonGaussianPoleError(
            f"locations outside Q(i){where}: irreducible cofactor {cofactor}"
        )
    return roots
