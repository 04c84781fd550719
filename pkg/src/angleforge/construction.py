"""Building the triple family: for every grid point z, tiered direction v and
positive scalars lam1, lam2, emit (z, z + lam1*v, z + rotor*lam2*v).

Every emitted triple has the configured angle at apex z, all ordered triples
are distinct, and every member point stays inside an explicitly bounded
grid.  The reported point set is the deduplicated union of triple members;
the containing grid itself is never materialized (it is astronomically large
for degree >= 2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .algebraic import AlgebraicContext
from .errors import BudgetExceeded, InputError, InvariantViolation
from .grids import GRID_LIMIT, gen_grid, positive_elements
from .planar import AngleMatch, PlanePoint, angle_at, rotor_norm, theta_rotor

TRIPLE_BUDGET = 10 ** 7


def positive_count(ctx: AlgebraicContext, m: int) -> int:
    """Exact number of sign-positive elements in the radius-m box."""
    return ((2 * m + 1) ** ctx.degree - 1) // 2


def expected_triple_count(ctx: AlgebraicContext, t: int) -> int:
    """Closed-form cardinality of the generator: grid size times the sum over
    tiers of quota * (positive scalar count)^2.  Matches generation exactly."""
    if t < 1:
        raise InputError("need t >= 1")
    d = ctx.degree
    total = 0
    for k in range(1, t + 1):
        quota = (2 * k) ** (2 * d) - (2 * (k - 1)) ** (2 * d)
        total += quota * positive_count(ctx, t // k) ** 2
    return (2 * t + 1) ** (2 * d) * total


def containment_radius(ctx: AlgebraicContext, t: int) -> int:
    """Radius of the grid guaranteed to contain every triple member:
    (1 + 2 * rotor_norm * complex_growth^2) * t."""
    return (1 + 2 * rotor_norm(ctx) * ctx.complex_growth ** 2) * t


def guaranteed_triples(ctx: AlgebraicContext, t: int) -> float:
    """The proven floor t^(4d) * ln t (zero at t = 1)."""
    if t < 1:
        raise InputError("need t >= 1")
    return t ** (4 * ctx.degree) * math.log(t)


def asymptotic_floor(ctx: AlgebraicContext, n: int) -> float:
    """Triple floor expressed in n: n^2 / (2d C3^2 2^(4d)) * ln(n / (2^(2d) C3)),
    valid whenever the sizing rule yields t >= 1."""
    d = ctx.degree
    c3 = ctx.size_factor
    return n * n / (2 * d * c3 * c3 * 2 ** (4 * d)) * math.log(n / (2 ** (2 * d) * c3))


def integer_nth_root(n: int, k: int) -> int:
    """floor(n^(1/k)) for n >= 0, k >= 1, exactly."""
    if n < 0 or k < 1:
        raise InputError("integer_nth_root needs n >= 0 and k >= 1")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + k - 1) // k)  # upper start for Newton
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def parameter_for_size(ctx: AlgebraicContext, n: int) -> int:
    """The unique t with size_factor * t^(2d) < n <= size_factor * (t+1)^(2d)."""
    if n <= ctx.size_factor:
        raise InputError(
            f"n must exceed the size factor {ctx.size_factor} to admit t >= 1"
        )
    t = integer_nth_root((n - 1) // ctx.size_factor, 2 * ctx.degree)
    assert ctx.size_factor * t ** (2 * ctx.degree) < n
    assert n <= ctx.size_factor * (t + 1) ** (2 * ctx.degree)
    return t


@dataclass
class TripleFamily:
    """Generated triples with provenance and the deduplicated union point set.

    provenance[i] = (k, z, v, lam1, lam2) reproduces triples[i]; points is
    sorted by coordinate key, so the whole structure is deterministic.
    """

    ctx: AlgebraicContext
    t: int
    triples: list
    provenance: list
    points: list


def build_triple_family(ctx: AlgebraicContext, t: int, *,
                        budget: int = TRIPLE_BUDGET,
                        grid_limit: int = GRID_LIMIT,
                        verify: bool = True) -> TripleFamily:
    """Enumerate the full triple family for parameter t.

    With verify=True (default) every emitted triple is checked against the
    exact angle predicate, ordered triples are checked pairwise distinct, the
    containment radius is asserted, and the count is checked against both the
    closed form and the proven floor.  A failure of any of these is fatal.
    """
    expected = expected_triple_count(ctx, t)
    if expected > budget:
        raise BudgetExceeded(
            f"generation would emit {expected} triples, above the budget {budget}",
            required=expected,
            limit=budget,
        )
    from .directions import select_direction_families

    family = select_direction_families(ctx, t, grid_limit)
    rotor = theta_rotor(ctx)
    zs = gen_grid(ctx, t, grid_limit)
    triples = []
    provenance = []
    for k in range(1, t + 1):
        lams = positive_elements(ctx, t // k, grid_limit)
        scaled = [
            (v, [(lam, v * lam) for lam in lams],
                [(lam, rotor * (v * lam)) for lam in lams])
            for v in family.tier(k)
        ]
        for z in zs:
            for v, arms, rots in scaled:
                for lam1, a in arms:
                    p1 = z + a
                    for lam2, r in rots:
                        triples.append((z, p1, z + r))
                        provenance.append((k, z, v, lam1, lam2))

    seen = set()
    points = []
    for tri in triples:
        for p in tri:
            key = p.key()
            if key not in seen:
                seen.add(key)
                points.append(p)
    points.sort(key=PlanePoint.key)

    result = TripleFamily(ctx, t, triples, provenance, points)
    if len(triples) != expected:
        raise InvariantViolation(
            f"generated {len(triples)} triples but the closed form gives {expected}"
        )
    if verify:
        verify_family(result)
    return result


def verify_family(fam: TripleFamily):
    """Assert the four family invariants; raises InvariantViolation on any miss."""
    ctx = fam.ctx
    for apex, p1, p2 in fam.triples:
        if angle_at(apex, p1, p2) is not AngleMatch.PLUS:
            raise InvariantViolation(
                f"triple {(apex, p1, p2)} fails the angle predicate"
            )
    keys = sorted((a.key(), b.key(), c.key()) for a, b, c in fam.triples)
    for x, y in zip(keys, keys[1:]):
        if x == y:
            raise InvariantViolation("duplicate ordered triple emitted")
    radius = containment_radius(ctx, fam.t)
    for p in fam.points:
        if p.grid_norm() > radius:
            raise InvariantViolation(
                f"point {p} escapes the containment radius {radius}"
            )
    if len(fam.triples) < guaranteed_triples(ctx, fam.t):
        raise InvariantViolation(
            f"only {len(fam.triples)} triples, below the proven floor"
        )
