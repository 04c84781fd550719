"""Generation of the coefficient-box and grid point sets.

The box of radius t holds every ring element whose coordinates are bounded
by t in absolute value ((2t+1)^d elements); the grid of radius t pairs two
box elements as real and imaginary parts ((2t+1)^(2d) points).  Generation
order is lexicographic over coordinate vectors so that every downstream
selection is deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebraic import AlgebraicContext, AlgebraicInt
from .errors import BudgetExceeded, InputError
from .planar import PlanePoint

GRID_LIMIT = 10 ** 8


@dataclass(frozen=True)
class GridSpec:
    """A (context, radius) pair with its exact cardinalities."""

    ctx: AlgebraicContext
    t: int

    @property
    def box_size(self) -> int:
        return (2 * self.t + 1) ** self.ctx.degree

    @property
    def grid_size(self) -> int:
        return (2 * self.t + 1) ** (2 * self.ctx.degree)


def _guard(count: int, limit: int, what: str):
    if count > limit:
        raise BudgetExceeded(
            f"{what} would hold {count} elements, above the guard of {limit}",
            required=count,
            limit=limit,
        )


def gen_coeff_box(ctx: AlgebraicContext, t: int, limit: int = GRID_LIMIT):
    """All ring elements with coordinates in [-t, t], in lexicographic order."""
    if t < 0:
        raise InputError("box radius must be nonnegative")
    _guard((2 * t + 1) ** ctx.degree, limit, "coefficient box")
    rng = range(-t, t + 1)
    return [AlgebraicInt(ctx, c) for c in itertools.product(rng, repeat=ctx.degree)]


def gen_grid(ctx: AlgebraicContext, t: int, limit: int = GRID_LIMIT):
    """All plane points with both coordinates in the radius-t box."""
    if t < 0:
        raise InputError("grid radius must be nonnegative")
    _guard((2 * t + 1) ** (2 * ctx.degree), limit, "grid")
    box = gen_coeff_box(ctx, t, limit)
    return [PlanePoint(re, im) for re in box for im in box]


def positive_elements(ctx: AlgebraicContext, t: int, limit: int = GRID_LIMIT):
    """The sign-positive half of the radius-t box, in generation order.

    By negation symmetry exactly (box_size - 1) / 2 elements qualify.
    """
    return [x for x in gen_coeff_box(ctx, t, limit) if ctx.sign_of_coeffs(x.coeffs) > 0]
