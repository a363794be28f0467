"""The group of norm-1 elements (a + b*sqrt(-D))/c of Q[sqrt(-D)].

Elements are kept in lowest terms with positive denominator, so equality is
structural. Multiplication is the elliptic rule
(x1*x2 - D*y1*y2, x1*y2 + x2*y1); conjugation is the group inverse. The
four-element group generated by negation and conjugation acts on non-unit
elements, and each orbit contains exactly one representative with positive
entries: the normalized solution of a^2 + D*b^2 = c^2.

The arithmetic is generic in D >= 1 (D = 1 works and is used in tests);
only to_normalized restricts to D > 1, where the orbit representative is
unique without further tie-breaking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateOrbitError, NoNormalizedFormError, NotOnEllipseError


@dataclass(frozen=True, order=True)
class GroupElement:
    """(a + b*sqrt(-D))/c in lowest terms, c > 0, with a^2 + D*b^2 = c^2."""

    D: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.D < 1:
            raise ValueError(f"D = {self.D} must be a positive integer")
        if self.c <= 0:
            raise ValueError(f"denominator c = {self.c} must be positive")
        if math.gcd(self.a, math.gcd(self.b, self.c)) != 1:
            raise ValueError(f"({self.a},{self.b},{self.c}) is not in lowest terms")
        if self.a**2 + self.D * self.b**2 != self.c**2:
            raise NotOnEllipseError(
                f"{self.a}^2 + {self.D}*{self.b}^2 != {self.c}^2"
            )

    @property
    def is_unit(self) -> bool:
        return self.c == 1

    def to_json_dict(self) -> dict:
        return {"D": self.D, "a": self.a, "b": self.b, "c": self.c}

    def __str__(self) -> str:
        return f"({self.a} + {self.b}*sqrt(-{self.D}))/{self.c}"


@dataclass(frozen=True, order=True)
class NormalizedSolution:
    """A solution of a^2 + D*b^2 = c^2 with a, b, c positive and coprime."""

    D: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.D < 1:
            raise ValueError(f"D = {self.D} must be a positive integer")
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(
                f"normalized solution needs positive entries, got "
                f"({self.a},{self.b},{self.c})"
            )
        if math.gcd(self.a, math.gcd(self.b, self.c)) != 1:
            raise ValueError(f"({self.a},{self.b},{self.c}) is not primitive")
        if self.a**2 + self.D * self.b**2 != self.c**2:
            raise NotOnEllipseError(
                f"{self.a}^2 + {self.D}*{self.b}^2 != {self.c}^2"
            )

    def to_element(self) -> GroupElement:
        return GroupElement(self.D, self.a, self.b, self.c)

    def to_json_dict(self) -> dict:
        return {"D": self.D, "a": self.a, "b": self.b, "c": self.c}


def make_element(D: int, a: int, b: int, c: int) -> GroupElement:
    """Reduce (a, b, c) to lowest terms with c > 0 and validate the norm."""
    if c == 0:
        raise ValueError("denominator c must be nonzero")
    if c < 0:
        a, b, c = -a, -b, -c
    g = math.gcd(a, math.gcd(b, c))
    return GroupElement(D, a // g, b // g, c // g)


def identity(D: int) -> GroupElement:
    return GroupElement(D, 1, 0, 1)


def multiply(z1: GroupElement, z2: GroupElement) -> GroupElement:
    """Elliptic product (x1*x2 - D*y1*y2, x1*y2 + x2*y1) over c1*c2."""
    if z1.D != z2.D:
        raise ValueError(f"mismatched D: {z1.D} vs {z2.D}")
    D = z1.D
    a = z1.a * z2.a - D * z1.b * z2.b
    b = z1.a * z2.b + z2.a * z1.b
    return make_element(D, a, b, z1.c * z2.c)


def conjugate(z: GroupElement) -> GroupElement:
    """(a - b*sqrt(-D))/c: an involution and the group inverse."""
    return GroupElement(z.D, z.a, -z.b, z.c)


def pow(z: GroupElement, n: int) -> GroupElement:
    """z^n by square-and-multiply; negative powers via the conjugate."""
    if n < 0:
        z, n = conjugate(z), -n
    result = identity(z.D)
    base = z
    while n:
        if n & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        n >>= 1
    return result


def gamma_orbit(z: GroupElement) -> frozenset[GroupElement]:
    """The four points {z, -z, conj(z), -conj(z)} of the sign/conjugation
    action; defined only where they are distinct (non-unit, b != 0)."""
    if z.is_unit or z.a == 0 or z.b == 0:
        raise DegenerateOrbitError(f"{z} has a sign/conjugation orbit smaller than 4")
    orbit = frozenset(
        GroupElement(z.D, sa * z.a, sb * z.b, z.c)
        for sa in (1, -1)
        for sb in (1, -1)
    )
    assert len(orbit) == 4
    return orbit


def to_normalized(z: GroupElement) -> NormalizedSolution:
    """The unique representative of z's sign/conjugation orbit with all
    entries positive."""
    if z.D == 1:
        raise ValueError(
            "D = 1 normalization also orders a < b; not provided here"
        )
    if z.is_unit or z.a == 0 or z.b == 0:
        raise NoNormalizedFormError(f"{z} has no positive normalized form")
    return NormalizedSolution(z.D, abs(z.a), abs(z.b), z.c)
