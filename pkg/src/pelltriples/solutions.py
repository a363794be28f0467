"""Deciding, counting, and enumerating normalized solutions of
a^2 + D*b^2 = c^2.

The pipeline: a square-free D > 1 with -D = 2 or 3 (mod 4) is admissible
when every class of discriminant -4D has order at most 2. For such D, odd
hypotenuses c whose prime factors p all satisfy (-D/p) = +1 carry exactly
2^(k-1) normalized solutions (k = number of distinct primes of c). The
solutions are built multiplicatively from elementary factors
zeta_p = (x0 + y0*sqrt(-D))/p, and conversely every norm-1 element with
hypotenuse c > 1 factors as +/- a product of zeta powers, with the
exponent signs decided by divisibility in Z[sqrt(-D)].

Outside the admissible D the 2^(k-1) law genuinely fails (D = 26, c = 5
has a positive Legendre symbol but no solution), so those D raise
UnsupportedClassGroupError instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import factorize, hensel_lift, is_prime, is_square_free, legendre
from .errors import (
    NotFactorableError,
    NotRepresentableError,
    UnsupportedClassGroupError,
)
from .gdgroup import (
    GroupElement,
    NormalizedSolution,
    multiply,
    pow as element_pow,
    to_normalized,
)
from .quadform import enumerate_class_group


@dataclass(frozen=True)
class Applicability:
    """Verdict on whether the counting theory covers a given D."""

    D: int
    residue_ok: bool
    square_free: bool
    free_z2: bool
    class_number: int

    @property
    def applicable(self) -> bool:
        return self.residue_ok and self.square_free and self.free_z2 and self.D > 1

    @property
    def reason(self) -> str | None:
        """Why D is out of scope, or None when it is applicable."""
        if not self.square_free:
            return f"D = {self.D} is not square-free"
        if not self.residue_ok:
            return f"-D = {-self.D} is not 2 or 3 mod 4"
        if self.D == 1:
            return "D = 1 (Pythagorean triples) has a < b in its normalization; use the classical parametrization"
        if not self.free_z2:
            return (
                f"class group of discriminant {-4 * self.D} is not a free Z2-module"
            )
        return None


@dataclass(frozen=True)
class ZetaFactor:
    """The unique positive coprime representation x0^2 + D*y0^2 = p^2;
    the elementary solution (x0 + y0*sqrt(-D))/p."""

    D: int
    p: int
    x0: int
    y0: int

    def __post_init__(self) -> None:
        if self.x0 < 1 or self.y0 < 1:
            raise ValueError("zeta components must be positive")
        if math.gcd(self.x0, self.y0) != 1:
            raise ValueError("zeta components must be coprime")
        if self.x0**2 + self.D * self.y0**2 != self.p**2:
            raise ValueError(f"{self.x0}^2 + {self.D}*{self.y0}^2 != {self.p}^2")

    def to_element(self) -> GroupElement:
        return GroupElement(self.D, self.x0, self.y0, self.p)


@dataclass(frozen=True)
class Factorization:
    """z = sign * product of zeta_p^e over terms; |e| is the multiplicity
    of p in the hypotenuse, and primes are strictly increasing."""

    D: int
    sign: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        prev = 1
        for p, e in self.terms:
            if p <= prev or e == 0:
                raise ValueError("terms must have ascending primes and nonzero exponents")
            prev = p

    def to_json_dict(self) -> dict:
        return {"sign": self.sign, "terms": [[p, e] for p, e in self.terms]}


@lru_cache(maxsize=None)
def check_applicability(D: int) -> Applicability:
    """Residue class, square-freeness, and the class group condition for D."""
    if D < 1:
        raise ValueError(f"D = {D} must be a positive integer")
    descriptor = enumerate_class_group(-4 * D)
    return Applicability(
        D=D,
        residue_ok=(-D) % 4 in (2, 3),
        square_free=is_square_free(D),
        free_z2=descriptor.is_free_z2,
        class_number=descriptor.class_number,
    )


def require_applicable(D: int) -> Applicability:
    """The applicability verdict, or UnsupportedClassGroupError when D is
    out of scope."""
    verdict = check_applicability(D)
    if not verdict.applicable:
        raise UnsupportedClassGroupError(verdict.reason)
    return verdict


def solution_exists(D: int, c: int) -> bool:
    """True iff a normalized solution with hypotenuse c exists: c odd,
    c > 1, and (-D/p) = +1 for every prime p of c."""
    require_applicable(D)
    if c < 1:
        raise ValueError(f"c = {c} must be a positive integer")
    if c == 1 or c % 2 == 0:
        return False
    return all(legendre(-D, p) == 1 for p, _ in factorize(c).factors)


@lru_cache(maxsize=None)
def zeta(D: int, p: int) -> ZetaFactor:
    """The elementary solution for an odd prime p with (-D/p) = +1.

    A root t of t^2 = -D (mod p^2) comes from Hensel lifting; the Euclidean
    remainder sequence of (p^2, t) descends to the representing x0, with a
    bounded scan over y0 <= p/sqrt(D) as fallback. The result is verified
    unconditionally.
    """
    require_applicable(D)
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p = {p} is not an odd prime")
    if D % p == 0:
        raise ValueError(f"p = {p} divides D = {D}")
    if legendre(-D, p) != 1:
        raise NotRepresentableError(
            f"(-{D}/{p}) = -1: p^2 has no primitive representation x^2 + {D}*y^2"
        )

    square = p * p
    t = hensel_lift(D, p, 2)
    for root in (t, square - t):
        hi, lo = square, root
        while lo * lo > square:
            hi, lo = lo, hi % lo
        x0 = lo
        rest = square - x0 * x0
        if rest > 0 and rest % D == 0:
            y0 = math.isqrt(rest // D)
            if y0 >= 1 and D * y0 * y0 == rest and math.gcd(x0, y0) == 1:
                return ZetaFactor(D, p, x0, y0)
    for y0 in range(1, math.isqrt((square - 1) // D) + 1):
        rest = square - D * y0 * y0
        x0 = math.isqrt(rest)
        if x0 >= 1 and x0 * x0 == rest and math.gcd(x0, y0) == 1:
            return ZetaFactor(D, p, x0, y0)
    raise ArithmeticError(f"no representation of {p}^2 found despite (-{D}/{p}) = 1")


def divides(u: tuple[int, int], v: tuple[int, int], D: int) -> tuple[int, int] | None:
    """Quotient of (v[0] + v[1]*sqrt(-D)) by (u[0] + u[1]*sqrt(-D)) when it
    has integer components, else None."""
    x, y = u
    if x == 0 and y == 0:
        raise ValueError("division by zero in Z[sqrt(-D)]")
    a, b = v
    norm = x * x + D * y * y
    real = a * x + D * b * y
    imag = b * x - a * y
    if real % norm or imag % norm:
        return None
    return (real // norm, imag // norm)


def _zpow(x: int, y: int, n: int, D: int) -> tuple[int, int]:
    """(x + y*sqrt(-D))^n as an integer pair, n >= 0."""
    rx, ry = 1, 0
    bx, by = x, y
    while n:
        if n & 1:
            rx, ry = rx * bx - D * ry * by, rx * by + bx * ry
        bx, by = bx * bx - D * by * by, 2 * bx * by
        n >>= 1
    return rx, ry


def factor_element(z: GroupElement) -> Factorization:
    """Express z as sign * product of zeta_p^(+/- alpha) over the prime
    powers p^alpha of its hypotenuse.

    For each prime power exactly one of zeta_p^alpha and its conjugate
    divides the numerator; that choice fixes the exponent sign, the factor
    is peeled off, and the residual unit fixes the overall sign.
    """
    require_applicable(z.D)
    if z.is_unit:
        return Factorization(z.D, z.a, ())
    primes = factorize(z.c).factors
    for p, _ in primes:
        if p == 2 or legendre(-z.D, p) != 1:
            raise NotFactorableError(
                f"hypotenuse prime {p} admits no elementary solution for D = {z.D}"
            )
    current = (z.a, z.b)
    terms = []
    for p, alpha in primes:
        zf = zeta(z.D, p)
        w = _zpow(zf.x0, zf.y0, alpha, z.D)
        quotient = divides(w, current, z.D)
        conj_quotient = divides((w[0], -w[1]), current, z.D)
        assert (quotient is None) != (conj_quotient is None), (
            f"exactly-one divisibility failed at p = {p} for {z}"
        )
        if quotient is not None:
            current = quotient
            terms.append((p, alpha))
        else:
            current = conj_quotient
            terms.append((p, -alpha))
    assert current in ((1, 0), (-1, 0)), f"nontrivial residual {current} for {z}"
    return Factorization(z.D, current[0], tuple(terms))


def recompose(factorization: Factorization) -> GroupElement:
    """The group element sign * product zeta_p^e; inverse of factor_element."""
    result = GroupElement(factorization.D, factorization.sign, 0, 1)
    for p, e in factorization.terms:
        result = multiply(result, element_pow(zeta(factorization.D, p).to_element(), e))
    return result


def enumerate_solutions(D: int, c: int) -> set[NormalizedSolution]:
    """All normalized solutions with hypotenuse c; empty when none exist.

    The representatives are zeta_{p1}^a1 * zeta_{p2}^(e2*a2) * ... with the
    smallest prime's exponent fixed positive and the other signs free, one
    per sign pattern: 2^(k-1) in total.
    """
    require_applicable(D)
    if c < 1:
        raise ValueError(f"c = {c} must be a positive integer")
    if c == 1 or c % 2 == 0:
        return set()
    primes = factorize(c).factors
    if any(legendre(-D, p) != 1 for p, _ in primes):
        return set()

    p1, alpha1 = primes[0]
    lead = element_pow(zeta(D, p1).to_element(), alpha1)
    products = [lead]
    for p, alpha in primes[1:]:
        zp = element_pow(zeta(D, p).to_element(), alpha)
        products = [
            multiply(z, factor) for z in products for factor in (zp, element_pow(zp, -1))
        ]
    found = {to_normalized(z) for z in products}
    assert len(found) == 1 << (len(primes) - 1), f"count law violated at D={D}, c={c}"
    assert all(s.c == c for s in found)
    return found


def count_solutions(D: int, c: int) -> int:
    """2^(k-1) over the k distinct primes of c when solutions exist, else 0;
    computed arithmetically, not by enumeration."""
    if not solution_exists(D, c):
        return 0
    return 1 << (factorize(c).distinct_prime_count - 1)


def multiply_solutions(
    s1: NormalizedSolution, s2: NormalizedSolution
) -> NormalizedSolution:
    """The solution with hypotenuse c1*c2 from the elliptic product of two
    solutions with coprime hypotenuses."""
    if s1.D != s2.D:
        raise ValueError(f"mismatched D: {s1.D} vs {s2.D}")
    if math.gcd(s1.c, s2.c) != 1:
        raise ValueError(
            f"hypotenuses {s1.c} and {s2.c} share a factor; product is not primitive"
        )
    product = multiply(s1.to_element(), s2.to_element())
    result = to_normalized(product)
    assert math.gcd(result.a, result.b) == 1
    return result


def describe_solutions(D: int, c: int) -> dict:
    """JSON-ready report: count plus each solution with its factorization,
    sorted by b ascending (b determines a, so this is a total order)."""
    found = sorted(enumerate_solutions(D, c), key=lambda s: s.b)
    return {
        "D": D,
        "c": c,
        "count": count_solutions(D, c),
        "solutions": [
            {
                "a": s.a,
                "b": s.b,
                "c": s.c,
                "factorization": factor_element(s.to_element()).to_json_dict(),
            }
            for s in found
        ],
    }
