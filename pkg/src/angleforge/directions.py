"""Exact direction machinery: ordering, the direction census, and the tiered
selection of direction representatives.

Directions mod pi (parallel classes) are what the census counts, matching
the classical "N points determine at least N-1 directions" guarantee that
the selection relies on.  Directions mod 2pi (rays) get a full total order
used by the fast counter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .algebraic import AlgebraicContext
from .errors import BudgetExceeded, InputError, InvariantViolation
from .grids import GRID_LIMIT, gen_grid
from .planar import PlanePoint, cross

CENSUS_LIMIT = 2000


def ray_class(v: PlanePoint) -> int:
    """Quadrant-style class of a nonzero vector: 0 on the +x axis, 1 in the
    open upper half-plane, 2 on the -x axis, 3 in the open lower half-plane."""
    s_im = v.im.sign()
    if s_im > 0:
        return 1
    if s_im < 0:
        return 3
    s_re = v.re.sign()
    if s_re > 0:
        return 0
    if s_re < 0:
        return 2
    raise InputError("zero vector has no direction")


def direction_order(u: PlanePoint, v: PlanePoint) -> int:
    """Compare two nonzero vectors by angle in [0, 2pi): -1, 0 or +1.

    Zero means same ray (cross = 0 and dot > 0).  Within an open half-plane
    the sign of the cross product orders angles; classes order the rest.
    """
    cu, cv = ray_class(u), ray_class(v)
    if cu != cv:
        return -1 if cu < cv else 1
    if cu in (0, 2):
        return 0
    return -cross(u, v).sign()


def _mod_pi_normalize(v: PlanePoint) -> PlanePoint:
    """Flip a nonzero vector into the closed upper half-plane (class 0 or 1)."""
    return -v if ray_class(v) in (2, 3) else v


def _mod_pi_order(u: PlanePoint, v: PlanePoint) -> int:
    """Compare upper-half-plane representatives by direction mod pi."""
    cu, cv = ray_class(u), ray_class(v)
    if cu != cv:
        return -1 if cu < cv else 1
    if cu == 0:
        return 0
    return -cross(u, v).sign()


def count_distinct_directions(points, limit: int = CENSUS_LIMIT) -> int:
    """Number of parallel classes among all pairwise difference vectors."""
    n = len(points)
    if n < 2:
        raise InputError("direction census needs at least 2 points")
    if n > limit:
        raise BudgetExceeded(
            f"census limited to {limit} points, got {n}", required=n, limit=limit
        )
    diffs = []
    for i in range(n):
        for j in range(i + 1, n):
            d = points[j] - points[i]
            if d.is_zero():
                raise InputError("points must be pairwise distinct")
            diffs.append(_mod_pi_normalize(d))
    diffs.sort(key=cmp_to_key(_mod_pi_order))
    count = 1
    for a, b in zip(diffs, diffs[1:]):
        if _mod_pi_order(a, b) != 0:
            count += 1
    return count


def tier_quota(degree: int, k: int) -> int:
    """Prescribed size of the k-th tier of direction representatives."""
    return (2 * k) ** (2 * degree) - (2 * (k - 1)) ** (2 * degree)


@dataclass
class DirectionFamily:
    """Tiered direction representatives: tier k (1-based) drawn from the
    radius-2k grid, all directions pairwise distinct across tiers."""

    ctx: AlgebraicContext
    t: int
    tiers: list = field(default_factory=list)

    def tier(self, k: int):
        return self.tiers[k - 1]

    def all_vectors(self):
        return [v for tier in self.tiers for v in tier]


def _bisect_direction(sorted_vecs, v):
    """Binary search by mod-pi order; returns (found, insertion_index)."""
    lo, hi = 0, len(sorted_vecs)
    while lo < hi:
        mid = (lo + hi) // 2
        c = _mod_pi_order(sorted_vecs[mid], v)
        if c < 0:
            lo = mid + 1
        elif c > 0:
            hi = mid
        else:
            return True, mid
    return False, lo


def select_direction_families(ctx: AlgebraicContext, t: int,
                              limit: int = GRID_LIMIT) -> DirectionFamily:
    """Fill every tier 1..t by scanning grids in deterministic order.

    Tier k admits nonzero radius-2k grid points whose direction mod pi is
    new across everything admitted so far, stopping at the tier quota.  The
    direction count guarantee makes every quota reachable; falling short
    would mean the exact arithmetic is broken, so it raises.
    """
    if t < 1:
        raise InputError("need t >= 1")
    family = DirectionFamily(ctx, t)
    seen = []  # normalized representatives, sorted by mod-pi order
    for k in range(1, t + 1):
        quota = tier_quota(ctx.degree, k)
        tier = []
        for v in gen_grid(ctx, 2 * k, limit):
            if v.is_zero():
                continue
            norm_v = _mod_pi_normalize(v)
            found, idx = _bisect_direction(seen, norm_v)
            if found:
                continue
            seen.insert(idx, norm_v)
            tier.append(v)
            if len(tier) == quota:
                break
        if len(tier) < quota:
            raise InvariantViolation(
                f"tier {k} quota {quota} unreachable ({len(tier)} found); "
                "this contradicts the distinct-direction guarantee"
            )
        family.tiers.append(tier)
    return family


def assert_pairwise_distinct_directions(vectors):
    """Exhaustive check that no two vectors are parallel (cross = 0)."""
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if cross(vectors[i], vectors[j]).is_zero():
                raise InvariantViolation(
                    f"vectors {i} and {j} share a direction mod pi"
                )
