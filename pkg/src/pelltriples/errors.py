"""Exception types shared across the package.

Everything derives from ValueError so callers that only care about
"bad input vs. bug" can catch one class; the CLI maps all of these to
exit code 2.
"""


class NoSquareRootError(ValueError):
    """The requested modular square root does not exist."""


class NotOnEllipseError(ValueError):
    """(a, b, c) does not satisfy a^2 + D*b^2 = c^2 after reduction."""


class DegenerateOrbitError(ValueError):
    """The sign/conjugation orbit of this element has fewer than 4 points."""


class NoNormalizedFormError(ValueError):
    """The element has no positive normalized representative."""


class NotRepresentableError(ValueError):
    """p^2 has no primitive representation x^2 + D*y^2 (p not in S)."""


class NotFactorableError(ValueError):
    """The hypotenuse has a prime factor outside S; no zeta factorization."""


class UnsupportedClassGroupError(ValueError):
    """D is outside the theory's hypotheses (residue class, square-freeness,
    or the class group of discriminant -4D is not an elementary 2-group)."""
