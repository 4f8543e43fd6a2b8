"""Gaussian integer arithmetic: gcd, prime factorization, divisor enumeration.

Gaussian integers are plain ``(a, b)`` tuples meaning ``a + b*i``.  The
divisor enumeration backs rational root finding over Q(i): candidate roots
``p/q`` have numerators dividing the trailing coefficient and denominators
dividing the leading coefficient, both in Z[i].

Integer factorization of norms is delegated to sympy; the lift to Gaussian
primes uses the classical split ``p = pi * conj(pi)`` for ``p = 1 mod 4``
obtained from a square root of -1 modulo p.
"""

from __future__ import annotations

from sympy import factorint
from sympy.ntheory.residue_ntheory import sqrt_mod

GInt = tuple[int, int]

UNITS: tuple[GInt, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


def gi_mul(x: GInt, y: GInt) -> GInt:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gi_conj(x: GInt) -> GInt:
    return (x[0], -x[1])


def gi_norm(x: GInt) -> int:
    return x[0] * x[0] + x[1] * x[1]


def gi_exact_div(x: GInt, y: GInt) -> GInt | None:
    """Return x / y if y divides x in Z[i], else None."""
    n = gi_norm(y)
    if n == 0:
        raise ZeroDivisionError("division by zero Gaussian integer")
    p = gi_mul(x, gi_conj(y))
    if p[0] % n or p[1] % n:
        return None
    return (p[0] // n, p[1] // n)


def gi_divmod(x: GInt, y: GInt) -> tuple[GInt, GInt]:
    """Euclidean division with remainder of norm < norm(y)."""
    n = gi_norm(y)
    if n == 0:
        raise ZeroDivisionError("division by zero Gaussian integer")
    p = gi_mul(x, gi_conj(y))
    # round to nearest integer quotient coordinates
    q = (_round_div(p[0], n), _round_div(p[1], n))
    r = (x[0] - (q[0] * y[0] - q[1] * y[1]), x[1] - (q[0] * y[1] + q[1] * y[0]))
    return q, r


def _round_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if 2 * r >= b:
        q += 1
    return q


def gi_gcd(x: GInt, y: GInt) -> GInt:
    while y != (0, 0):
        _, r = gi_divmod(x, y)
        x, y = y, r
    return x


def canonical_associate(x: GInt) -> GInt:
    """The unit multiple of x in the half-open first quadrant (a > 0, b >= 0)."""
    if x == (0, 0):
        return x
    for u in UNITS:
        y = gi_mul(x, u)
        if y[0] > 0 and y[1] >= 0:
            return y
    raise AssertionError("unreachable: some unit rotation lands in the first quadrant")


def gi_factor(x: GInt) -> dict[GInt, int]:
    """Gaussian prime factorization of x, primes in canonical associate form.

    The unit cofactor is not returned; callers enumerating divisors up to
    units do not need it.
    """
    if x == (0, 0):
        raise ValueError("cannot factor zero")
    result: dict[GInt, int] = {}
    rest = x
    for p, exp in factorint(gi_norm(x)).items():
        if p == 2:
            pi = (1, 1)
            count = 0
            while True:
                q = gi_exact_div(rest, pi)
                if q is None:
                    break
                rest = q
                count += 1
            if count:
                result[canonical_associate(pi)] = count
        elif p % 4 == 3:
            # p stays prime in Z[i]; exponent in x is exp // 2
            pi = (p, 0)
            count = 0
            while True:
                q = gi_exact_div(rest, pi)
                if q is None:
                    break
                rest = q
                count += 1
            if count:
                result[canonical_associate(pi)] = count
        else:
            root = sqrt_mod(-1, p)
            pi = canonical_associate(gi_gcd((p, 0), (int(root), 1)))
            for cand in (pi, canonical_associate(gi_conj(pi))):
                count = 0
                while True:
                    q = gi_exact_div(rest, cand)
                    if q is None:
                        break
                    rest = q
                    count += 1
                if count:
                    result[cand] = result.get(cand, 0) + count
    if gi_norm(rest) != 1:
        raise AssertionError(f"incomplete Gaussian factorization of {x}: left {rest}")
    return result


def gi_divisors_up_to_units(x: GInt) -> list[GInt]:
    """All divisors of x in Z[i], one representative per associate class."""
    divisors = [(1, 0)]
    for prime, exp in gi_factor(x).items():
        grown = []
        power = (1, 0)
        for _ in range(exp + 1):
            grown.extend(gi_mul(d, power) for d in divisors)
            power = gi_mul(power, prime)
        divisors = grown
    return [canonical_associate(d) for d in divisors]
