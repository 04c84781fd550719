"""Exact-arithmetic construction and counting of planar point triples that
determine a fixed angle theta whose tangent is a real algebraic number.

The package builds structured point sets in which many (apex, pair)
incidences realize theta, and provides two independent exact counters for
such incidences in arbitrary point sets over the same ring.
"""
from .algebraic import (AlgebraicContext, AlgebraicInt, context_from_minpoly,
                        context_from_tangent, normalize_tangent)
from .construction import (TripleFamily, build_triple_family,
                           containment_radius, expected_triple_count,
                           guaranteed_triples, parameter_for_size)
from .counting import CountReport, count_brute, count_fast, sweep, sweep_csv
from .directions import (DirectionFamily, count_distinct_directions,
                         direction_order, select_direction_families)
from .errors import (BudgetExceeded, InputError, InvariantViolation,
                     RationalRootWarning)
from .grids import GridSpec, gen_coeff_box, gen_grid, positive_elements
from .planar import (AngleMatch, PlanePoint, angle_at, cross, dot,
                     rotate_theta, theta_rotor)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicContext",
    "AlgebraicInt",
    "AngleMatch",
    "BudgetExceeded",
    "CountReport",
    "DirectionFamily",
    "GridSpec",
    "InputError",
    "InvariantViolation",
    "PlanePoint",
    "RationalRootWarning",
    "TripleFamily",
    "angle_at",
    "build_triple_family",
    "containment_radius",
    "context_from_minpoly",
    "context_from_tangent",
    "count_brute",
    "count_distinct_directions",
    "count_fast",
    "cross",
    "dot",
    "expected_triple_count",
    "gen_coeff_box",
    "gen_grid",
    "guaranteed_triples",
    "normalize_tangent",
    "parameter_for_size",
    "positive_elements",
    "rotate_theta",
    "select_direction_families",
    "sweep",
    "sweep_csv",
    "theta_rotor",
]
