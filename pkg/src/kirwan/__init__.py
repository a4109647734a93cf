"""Exact kernel of the Kirwan map for circle actions on products.

Given, for each factor of a product manifold whose cohomology is singly
generated, the moment-map values at its fixed points, this package computes
generating sets for the ideal of equivariant classes killed by restriction
to either side of a regular level, presents the quotient's cohomology ring
as an explicit polynomial quotient with Betti numbers, and cross-certifies
every family against a brute-force vanishing-ideal oracle.  All arithmetic
is exact over the rationals.
"""

from .poly import (
    EliminationBlock,
    GradedLex,
    GradedReverseLex,
    GREVLEX,
    GRLEX,
    LinearForm,
    NonVanishingPointError,
    Poly,
    Rational,
    linear_decompose,
    product_of_linear_forms,
    variables,
)
from .groebner import (
    Ideal,
    NonHomogeneousError,
    groebner_basis,
    is_groebner_basis,
    normal_form,
    point_ideal,
    vanishing_ideal,
)
from .moment import (
    Classification,
    Factor,
    MomentSystem,
    NonDecreasingValuesError,
    SingularValueError,
    build_system,
    classify,
    mu_value,
    preset_projective,
    preset_sphere,
)
from .kernel import (
    Covering,
    FactorCountNotTwoError,
    Hypergraph,
    QuotientPresentation,
    covering_generator,
    default_max_degree,
    kernel_full,
    kernel_minus,
    kernel_plus,
    minimal_coverings,
    reduced_cohomology,
    staircase_generators,
)
from .spheres import (
    NormalizedFamilies,
    PolygonFamilies,
    SphereFamilies,
    SubsetFamily,
    abelian_polygon_families,
    normalize_radii,
    scale_variables,
    sphere_families,
    sphere_subsets,
    sphere_system,
)
from .oracle import Certificate, certify_system, check_vanishing, oracle_kernel

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Classification",
    "Covering",
    "EliminationBlock",
    "Factor",
    "FactorCountNotTwoError",
    "GradedLex",
    "GradedReverseLex",
    "GREVLEX",
    "GRLEX",
    "Hypergraph",
    "Ideal",
    "LinearForm",
    "MomentSystem",
    "NonDecreasingValuesError",
    "NonHomogeneousError",
    "NonVanishingPointError",
    "NormalizedFamilies",
    "Poly",
    "PolygonFamilies",
    "QuotientPresentation",
    "Rational",
    "SingularValueError",
    "SphereFamilies",
    "SubsetFamily",
    "abelian_polygon_families",
    "build_system",
    "certify_system",
    "check_vanishing",
    "classify",
    "covering_generator",
    "default_max_degree",
    "groebner_basis",
    "is_groebner_basis",
    "kernel_full",
    "kernel_minus",
    "kernel_plus",
    "linear_decompose",
    "minimal_coverings",
    "mu_value",
    "normal_form",
    "normalize_radii",
    "oracle_kernel",
    "point_ideal",
    "preset_projective",
    "preset_sphere",
    "product_of_linear_forms",
    "reduced_cohomology",
    "scale_variables",
    "sphere_families",
    "sphere_subsets",
    "sphere_system",
    "staircase_generators",
    "vanishing_ideal",
    "variables",
]
