"""Counting angle triples in an arbitrary exact point set.

A triple is an apex p together with an unordered pair {q, r} of other
points such that the undirected angle at p between q and r equals the
configured theta.  Two counters are provided: a cubic brute-force oracle
that applies the exact angle predicate to every (apex, pair), and a fast
counter that groups difference vectors into rays and matches each ray
against its rotated image.  Both are exact and must always agree.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key

from .algebraic import AlgebraicContext
from .construction import TRIPLE_BUDGET, build_triple_family, containment_radius
from .directions import direction_order
from .errors import BudgetExceeded, InputError, InvariantViolation
from .grids import GRID_LIMIT, gen_grid
from .planar import AngleMatch, angle_at, rotate_theta, theta_rotor

BRUTE_LIMIT = 800
FAST_LIMIT = 5000

# Per-call cap on memo entries in the fast counter (bounds memory on point
# sets whose difference vectors rarely repeat).
_MEMO_CAP = 1_000_000


@dataclass
class CountReport:
    """Result of one counting run.

    total is the number of (apex, unordered pair) incidences with angle
    theta; per_apex, when requested, lists the contribution of each point
    in input order and sums to total.
    """

    total: int
    per_apex: list | None
    method: str
    elapsed: float


def _check_points(points, ctx: AlgebraicContext):
    seen = set()
    for p in points:
        if p.ctx != ctx:
            raise InputError("point does not belong to the supplied context")
        key = p.key()
        if key in seen:
            raise InputError(f"duplicate point {p}")
        seen.add(key)


def _map_apexes(fn, n: int, threads: int):
    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, range(n)))
    return [fn(i) for i in range(n)]


# -- brute force -----------------------------------------------------------

def _brute_apex_generic(points, i: int) -> int:
    apex = points[i]
    others = points[:i] + points[i + 1:]
    total = 0
    m = len(others)
    for j in range(m - 1):
        q = others[j]
        for k in range(j + 1, m):
            if angle_at(apex, q, others[k]) is not AngleMatch.NONE:
                total += 1
    return total


def _brute_apex_ints(pts, i: int, a: int, b: int) -> int:
    # Degree-1 kernel: alpha is the plain integer a, every coordinate is an
    # int, and the two angle relations collapse to integer identities on
    # Z = w * conj(u) with X = Re Z, Y = Im Z.
    xi, yi = pts[i]
    diffs = [(x - xi, y - yi) for x, y in pts[:i] + pts[i + 1:]]
    total = 0
    m = len(diffs)
    for j in range(m - 1):
        u1, u2 = diffs[j]
        for k in range(j + 1, m):
            w1, w2 = diffs[k]
            y = w2 * u1 - w1 * u2
            if y > 0:
                if (w1 * u1 + w2 * u2) * a == y * b:
                    total += 1
            elif y < 0:
                if (w1 * u1 + w2 * u2) * a == -y * b:
                    total += 1
    return total


def count_brute(points, ctx: AlgebraicContext, *, limit: int = BRUTE_LIMIT,
                per_apex: bool = False, threads: int = 1,
                force_generic: bool = False) -> CountReport:
    """Cubic oracle: one exact predicate call per (apex, unordered pair).

    force_generic disables the degree-1 integer kernel so the generic
    predicate path can be exercised on degree-1 inputs too.
    """
    points = list(points)
    n = len(points)
    if n > limit:
        raise BudgetExceeded(
            f"{n} points exceed the brute-force limit {limit}",
            required=n, limit=limit,
        )
    _check_points(points, ctx)
    start = time.perf_counter()
    if ctx.degree == 1 and not force_generic:
        pts = [(p.re.coeffs[0], p.im.coeffs[0]) for p in points]
        a = ctx.reduction[0]
        b = ctx.b
        counts = _map_apexes(lambda i: _brute_apex_ints(pts, i, a, b), n, threads)
    else:
        counts = _map_apexes(lambda i: _brute_apex_generic(points, i), n, threads)
    elapsed = time.perf_counter() - start
    return CountReport(sum(counts), counts if per_apex else None, "brute", elapsed)


# -- fast angular counter --------------------------------------------------

def _ray_bisect(reps, v):
    """Index of the ray equal to v in a direction-sorted list, else None."""
    lo, hi = 0, len(reps)
    while lo < hi:
        mid = (lo + hi) // 2
        c = direction_order(reps[mid], v)
        if c == 0:
            return mid
        if c < 0:
            lo = mid + 1
        else:
            hi = mid
    return None


def _fast_apex_sorted(points, i: int) -> int:
    # Reference route for any degree: sort the difference vectors around the
    # apex by exact angle, group equal rays, locate each rotated ray by
    # binary search.  O(n log n) comparisons per apex.
    apex = points[i]
    diffs = [p - apex for j, p in enumerate(points) if j != i]
    diffs.sort(key=cmp_to_key(direction_order))
    reps = []
    mults = []
    for v in diffs:
        if reps and direction_order(reps[-1], v) == 0:
            mults[-1] += 1
        else:
            reps.append(v)
            mults.append(1)
    total = 0
    for u, m in zip(reps, mults):
        j = _ray_bisect(reps, rotate_theta(u))
        if j is not None:
            total += m * mults[j]
    return total


def _fast_apex_ints(pts, i: int, a: int, b: int, prim_memo, rot_memo) -> int:
    # Degree-1 kernel: rays are keyed by primitive integer vectors, which is
    # sound because two integer vectors span the same ray exactly when their
    # primitive forms coincide.  Hash lookups replace the sort entirely.
    # Structured inputs repeat difference vectors across apexes, so the
    # primitive form and the rotated-ray image are memoized per call.
    gcd = math.gcd
    xi, yi = pts[i]
    mult = {}
    pget = prim_memo.get
    for j, (x, y) in enumerate(pts):
        if j == i:
            continue
        dk = (x - xi, y - yi)
        key = pget(dk)
        if key is None:
            g = gcd(dk[0], dk[1])
            key = (dk[0] // g, dk[1] // g)
            if len(prim_memo) < _MEMO_CAP:
                prim_memo[dk] = key
        if key in mult:
            mult[key] += 1
        else:
            mult[key] = 1
    total = 0
    mget = mult.get
    rget = rot_memo.get
    for key, m in mult.items():
        target = rget(key)
        if target is None:
            x, y = key
            tx = b * x - a * y
            ty = a * x + b * y
            g = gcd(tx, ty)
            target = (tx // g, ty // g)
            if len(rot_memo) < _MEMO_CAP:
                rot_memo[key] = target
        hit = mget(target)
        if hit:
            total += m * hit
    return total


def _primitive_positive(row, pivot):
    g = 0
    for x in row:
        g = math.gcd(g, x)
    if row[pivot] < 0:
        g = -g
    return tuple(x // g for x in row)


def _rowspace_key(r1, r2):
    """Canonical form of the rational span of two independent integer rows:
    integer-scaled reduced row echelon form, rows primitive with positive
    pivots.  Equal keys exactly when the rowspaces over the rationals agree.
    """
    j1 = 0
    while r1[j1] == 0 and r2[j1] == 0:
        j1 += 1
    if r1[j1] == 0:
        r1, r2 = r2, r1
    p = r1[j1]
    q = r2[j1]
    r2 = tuple(p * y - q * x for x, y in zip(r1, r2))
    j2 = j1 + 1
    end = len(r2)
    while j2 < end and r2[j2] == 0:
        j2 += 1
    if j2 == end:
        raise InvariantViolation(
            "ray key rows are dependent; alpha behaves like a rational, "
            "so the minimal polynomial cannot be irreducible"
        )
    p = r2[j2]
    q = r1[j2]
    r1 = tuple(p * x - q * y for x, y in zip(r1, r2))
    return _primitive_positive(r1, j1), _primitive_positive(r2, j2)


def _ray_key(ctx: AlgebraicContext, re, im):
    """Exact hashable ray identifier for coordinate vectors (re, im).

    Two vectors share a ray exactly when one is a positive real multiple c
    of the other with c in the fraction field of the ring.  The orbit of
    (re, im) under all nonzero c is the rational span of the vector and its
    alpha-multiple (2 independent rows since alpha is irrational), and c > 0
    is pinned down by the sign of the real part (or of the imaginary part
    on the vertical line), because real scalars scale each part's sign.
    """
    row1 = re + im
    row2 = ctx.alpha_mul_coeffs(re) + ctx.alpha_mul_coeffs(im)
    s = ctx.sign_of_coeffs(re)
    if s:
        orient = s
    else:
        orient = 3 * ctx.sign_of_coeffs(im)
    return _rowspace_key(row1, row2), orient


def _fast_apex_keyed(ctx, pts, rotor, key_memo, rot_memo, i: int) -> int:
    # Degree >= 2 kernel: hash grouping by the exact ray key; each distinct
    # ray keeps one representative whose rotated image is keyed and looked
    # up.  Replaces the comparator sort with O(n) dictionary work per apex.
    # Ray keys of difference vectors and rotated images are memoized per
    # call, keyed by the raw difference tuple and the ray respectively.
    d = ctx.degree
    bre, bim = rotor
    ctx_mul = ctx.mul_coeffs
    xi = pts[i]
    mult = {}
    rep = {}
    kget = key_memo.get
    for j, pj in enumerate(pts):
        if j == i:
            continue
        dk = tuple(a - b for a, b in zip(pj, xi))
        key = kget(dk)
        if key is None:
            key = _ray_key(ctx, dk[:d], dk[d:])
            if len(key_memo) < _MEMO_CAP:
                key_memo[dk] = key
        if key in mult:
            mult[key] += 1
        else:
            mult[key] = 1
            rep[key] = dk
    total = 0
    mget = mult.get
    rget = rot_memo.get
    for key, m in mult.items():
        target = rget(key)
        if target is None:
            dk = rep[key]
            re, im = dk[:d], dk[d:]
            tre = tuple(a - b for a, b in zip(ctx_mul(bre, re), ctx_mul(bim, im)))
            tim = tuple(a + b for a, b in zip(ctx_mul(bre, im), ctx_mul(bim, re)))
            target = _ray_key(ctx, tre, tim)
            if len(rot_memo) < _MEMO_CAP:
                rot_memo[key] = target
        hit = mget(target)
        if hit:
            total += m * hit
    return total


def count_fast(points, ctx: AlgebraicContext, *, per_apex: bool = False,
               threads: int = 1, force_sort: bool = False) -> CountReport:
    """Per apex: group difference vectors into equal-ray classes, then match
    each ray u against the ray of u rotated by theta.  Exactly one of the
    two rotation relations can hold for an unordered pair, so each theta
    pair is counted once.

    The default route groups rays by exact hashable keys (primitive integer
    vectors for degree 1, canonical rowspaces plus a sign for higher
    degree); force_sort selects the comparator sort-and-bisect route, kept
    as an independent implementation for cross-checking.
    """
    points = list(points)
    n = len(points)
    _check_points(points, ctx)
    start = time.perf_counter()
    if force_sort:
        counts = _map_apexes(lambda i: _fast_apex_sorted(points, i), n, threads)
    elif ctx.degree == 1:
        pts = [(p.re.coeffs[0], p.im.coeffs[0]) for p in points]
        a = ctx.reduction[0]
        b = ctx.b
        prim_memo, rot_memo = {}, {}
        counts = _map_apexes(
            lambda i: _fast_apex_ints(pts, i, a, b, prim_memo, rot_memo),
            n, threads)
    else:
        pts = [p.re.coeffs + p.im.coeffs for p in points]
        rot = theta_rotor(ctx)
        rotor = (rot.re.coeffs, rot.im.coeffs)
        key_memo, rot_memo = {}, {}
        counts = _map_apexes(
            lambda i: _fast_apex_keyed(ctx, pts, rotor, key_memo, rot_memo, i),
            n, threads)
    elapsed = time.perf_counter() - start
    return CountReport(sum(counts), counts if per_apex else None, "fast", elapsed)


# -- growth sweep ----------------------------------------------------------

@dataclass
class SweepRow:
    """One sweep step; a skipped step keeps t and leaves the rest None."""

    t: int
    n: int | None
    triples: int | None
    n2logn: float | None
    ratio: float | None

    @property
    def skipped(self) -> bool:
        return self.triples is None


def sweep(ctx: AlgebraicContext, ts, *, point_set: str = "grid",
          fast_limit: int = FAST_LIMIT, triple_budget: int = TRIPLE_BUDGET,
          grid_limit: int = GRID_LIMIT, threads: int = 1) -> list:
    """Count triples across a range of t and relate them to n^2 ln n.

    point_set chooses the inputs: "grid" takes the full grid of the
    containment radius for each t, "union" takes the deduplicated union of
    the generated triple family.  A step whose point count exceeds
    fast_limit (or whose generation exceeds triple_budget) yields a skipped
    row and the sweep continues.
    """
    if point_set not in ("grid", "union"):
        raise InputError("point_set must be 'grid' or 'union'")
    rows = []
    for t in ts:
        if t < 1:
            raise InputError("sweep needs t >= 1")
        if point_set == "grid":
            radius = containment_radius(ctx, t)
            n = (2 * radius + 1) ** (2 * ctx.degree)
            if n > fast_limit:
                rows.append(SweepRow(t, n, None, None, None))
                continue
            points = gen_grid(ctx, radius, grid_limit)
        else:
            try:
                fam = build_triple_family(ctx, t, budget=triple_budget,
                                          grid_limit=grid_limit, verify=False)
            except BudgetExceeded:
                rows.append(SweepRow(t, None, None, None, None))
                continue
            points = fam.points
            n = len(points)
            if n > fast_limit:
                rows.append(SweepRow(t, n, None, None, None))
                continue
        report = count_fast(points, ctx, threads=threads)
        n2logn = n * n * math.log(n)
        rows.append(SweepRow(t, n, report.total, n2logn, report.total / n2logn))
    return rows


def sweep_csv(rows) -> str:
    """Render sweep rows as CSV, skipped fields as NA, fixed float format."""
    lines = ["t,n,triples,n2logn,ratio"]
    for r in rows:
        n = "NA" if r.n is None else str(r.n)
        if r.skipped:
            lines.append(f"{r.t},{n},NA,NA,NA")
        else:
            lines.append(
                f"{r.t},{n},{r.triples},{r.n2logn:.6f},{r.ratio:.6f}"
            )
    return "\n".join(lines) + "\n"
