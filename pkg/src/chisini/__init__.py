"""Exact invariant calculus for generic covers of the projective plane.

The main entry points::

    from chisini import CurveInvariants, chisini_check, validate_discriminant_candidate
    inv = CurveInvariants.from_dgc(10, 51, 108)
    chisini_check(inv, 5).max_competing_degree   # 6
"""

from .criterion import (
    ChisiniVerdict,
    FiberProductNumbers,
    chisini_check,
    fiber_product_numbers,
    uniqueness_guaranteed_by_genus,
    uniqueness_threshold,
)
from .errors import *  # noqa: F401,F403
from .invariants import (
    CurveInvariants,
    DualInvariants,
    MorphismInvariants,
    Rational,
    complete_morphism_invariants,
    hodge_degree_bound,
    line_degree_bound,
    nodes_from_genus,
    plucker_dual,
    validate_discriminant_candidate,
)
from .lattice import verify_product_orbits
from .perm import Permutation
from .presentation import MarkedPresentation, enumerate_admissible, load_presentation, local_model_suite
from .records import OutputRecord
from .search import SearchConstraintProfile, canonical_conditions, find_potential_counterexamples

__version__ = "0.1.0"
