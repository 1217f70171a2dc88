"""Exact Conway tangle calculus for recombination tangle equations.

The package solves and verifies the two systems of tangle equations that
model a single round of site-specific recombination on unknotted circular
DNA, with torus-link products for direct repeats and torus-knot products
for inverted repeats.  Everything is exact integer arithmetic; closures are
checked twice, once through the fraction calculus and once through a
Kauffman-bracket diagram oracle.
"""

from .errors import (
    DomainError,
    InfinityInputError,
    NonCoprimeError,
    NormalFormRequiredError,
    NotATangleError,
    OpenDiagramError,
    ParseError,
    ScaleExceededError,
    TangleError,
    UnsupportedTangleError,
)
from .fourplat import (
    FourPlat,
    UNKNOT,
    UNLINK,
    as_torus_2strand,
    canonicalize,
    closure_of_sum,
    closure_sum_fraction,
    fourplat_eq,
    numerator_closure,
)
from .montesinos import (
    COMPOSITE,
    THREE_EXCEPTIONAL_FIBERS,
    MontesinosExpr,
    NotFourPlat,
    TangleValue,
    TrailOp,
    absorb_integral,
    closure_of_value,
    closure_with,
    mirror_value,
    presentation_normal_form,
    reduce_to_normal_form,
    value_text,
)
from .notation import parse_tangle, parse_value, render
from .rational import (
    INFINITY,
    TangleClass,
    TangleFraction,
    ZERO,
    add_horizontal,
    cf_eval,
    cf_expand,
    classify,
    fraction,
    mirror,
    star_vertical,
)
from .solver import (
    SystemSpec,
    brute_force_montesinos,
    brute_force_rational,
    canonical_bezout,
    chiral_refinement,
    class2_constraints_check,
    compensating_normal_form,
    fourth_solution,
    parametric_family,
    product_target,
    r_options_for_integral_P,
    verify_solution,
    xer_darcy_family,
    xer_demo,
)

__version__ = "0.1.0"
