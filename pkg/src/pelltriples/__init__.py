"""Count and enumerate the coprime positive solutions of a^2 + D*b^2 = c^2
for square-free D whose quadratic forms of discriminant -4D all have class
order at most 2, with a brute-force oracle for independent verification."""

from .arith import (
    FactoredInteger,
    PrimePower,
    factorize,
    hensel_lift,
    is_prime,
    is_square_free,
    legendre,
    sqrt_mod_p,
)
from .errors import (
    DegenerateOrbitError,
    NoNormalizedFormError,
    NoSquareRootError,
    NotFactorableError,
    NotOnEllipseError,
    NotRepresentableError,
    UnsupportedClassGroupError,
)
from .gdgroup import (
    GroupElement,
    NormalizedSolution,
    conjugate,
    gamma_orbit,
    identity,
    make_element,
    multiply,
    to_normalized,
)
from .gdgroup import pow as element_pow
from .oracle import (
    OracleReport,
    SweepSummary,
    brute_force_solutions,
    cross_check,
    verify_sweep,
)
from .quadform import (
    ClassGroupDescriptor,
    QuadForm,
    compose,
    element_order,
    enumerate_class_group,
    identity_form,
    reduce,
)
from .solutions import (
    Applicability,
    Factorization,
    ZetaFactor,
    check_applicability,
    count_solutions,
    describe_solutions,
    divides,
    enumerate_solutions,
    factor_element,
    multiply_solutions,
    recompose,
    require_applicable,
    solution_exists,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "Applicability",
    "ClassGroupDescriptor",
    "DegenerateOrbitError",
    "FactoredInteger",
    "Factorization",
    "GroupElement",
    "NoNormalizedFormError",
    "NoSquareRootError",
    "NormalizedSolution",
    "NotFactorableError",
    "NotOnEllipseError",
    "NotRepresentableError",
    "OracleReport",
    "PrimePower",
    "QuadForm",
    "SweepSummary",
    "UnsupportedClassGroupError",
    "ZetaFactor",
    "brute_force_solutions",
    "check_applicability",
    "compose",
    "conjugate",
    "count_solutions",
    "cross_check",
    "describe_solutions",
    "divides",
    "element_order",
    "element_pow",
    "enumerate_class_group",
    "enumerate_solutions",
    "factor_element",
    "factorize",
    "gamma_orbit",
    "hensel_lift",
    "identity",
    "identity_form",
    "is_prime",
    "is_square_free",
    "legendre",
    "make_element",
    "multiply",
    "multiply_solutions",
    "recompose",
    "reduce",
    "require_applicable",
    "solution_exists",
    "sqrt_mod_p",
    "to_normalized",
    "verify_sweep",
    "zeta",
]
