import itertools
import math
import random
from fractions import Fraction

import mpmath
import pytest

from angleforge import (
    BudgetExceeded,
    InputError,
    count_distinct_directions,
    cross,
    gen_grid,
    select_direction_families,
)
from angleforge.directions import (
    assert_pairwise_distinct_directions,
    direction_order,
    tier_quota,
)

from conftest import pt, pts


def _slope_census(int_pairs):
    """Independent census for integer points: primitive slopes mod pi."""
    seen = set()
    for (x1, y1), (x2, y2) in itertools.combinations(int_pairs, 2):
        dx, dy = x2 - x1, y2 - y1
        g = math.gcd(abs(dx), abs(dy))
        dx, dy = dx // g, dy // g
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        seen.add((dx, dy))
    return len(seen)


class TestDirectionOrder:
    def test_examples(self, ctx_pi4):
        assert direction_order(pt(ctx_pi4, 1, 0), pt(ctx_pi4, 0, 1)) == -1
        assert direction_order(pt(ctx_pi4, 1, 1), pt(ctx_pi4, 2, 2)) == 0
        assert direction_order(pt(ctx_pi4, -1, 0), pt(ctx_pi4, 1, 0)) == 1

    def test_zero_rejected(self, ctx_pi4):
        with pytest.raises(InputError):
            direction_order(pt(ctx_pi4, 0, 0), pt(ctx_pi4, 1, 0))
        with pytest.raises(InputError):
            direction_order(pt(ctx_pi4, 1, 0), pt(ctx_pi4, 0, 0))

    def test_equal_means_same_ray(self, ctx_pi4):
        u, v = pt(ctx_pi4, 2, 1), pt(ctx_pi4, 6, 3)
        assert direction_order(u, v) == 0
        assert direction_order(u, -v) != 0

    def test_full_turn_sorted(self, ctx_pi4):
        # Eight compass vectors in counterclockwise order from +x.
        ring = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
        vs = pts(ctx_pi4, ring)
        for i in range(len(vs)):
            for j in range(len(vs)):
                expect = (i > j) - (i < j)
                assert direction_order(vs[i], vs[j]) == expect

    def test_matches_float_angles(self, ctx_sqrt2):
        rng = random.Random(4242)
        lo, hi = ctx_sqrt2.alpha_enclosure(Fraction(1, 10**30))
        with mpmath.workprec(200):
            alpha = (mpmath.mpf(lo.numerator) / lo.denominator
                     + mpmath.mpf(hi.numerator) / hi.denominator) / 2

            def angle(v):
                re = v.re.coeffs[0] + v.re.coeffs[1] * alpha
                im = v.im.coeffs[0] + v.im.coeffs[1] * alpha
                return mpmath.atan2(im, re) % (2 * mpmath.pi)

            from angleforge import PlanePoint

            for _ in range(300):
                coords = [rng.randint(-8, 8) for _ in range(8)]
                u = PlanePoint.from_coeffs(ctx_sqrt2, coords[0:2], coords[2:4])
                v = PlanePoint.from_coeffs(ctx_sqrt2, coords[4:6], coords[6:8])
                if u.is_zero() or v.is_zero():
                    continue
                au, av = angle(u), angle(v)
                if abs(au - av) < mpmath.mpf(10) ** -30:
                    assert direction_order(u, v) == 0
                else:
                    assert direction_order(u, v) == (1 if au > av else -1)

    def test_transitive_on_samples(self, ctx_sqrt2):
        rng = random.Random(11)
        from angleforge import PlanePoint

        draws = []
        while len(draws) < 30:
            coords = [rng.randint(-5, 5) for _ in range(4)]
            v = PlanePoint.from_coeffs(ctx_sqrt2, coords[0:2], coords[2:4])
            if not v.is_zero():
                draws.append(v)
        for a, b, c in itertools.combinations(draws, 3):
            if direction_order(a, b) <= 0 and direction_order(b, c) <= 0:
                assert direction_order(a, c) <= 0


class TestCensus:
    def test_three_by_three(self, ctx_pi4):
        grid = gen_grid(ctx_pi4, 1)
        assert count_distinct_directions(grid) == 8

    def test_independent_slope_oracle(self, ctx_pi4):
        for t in (1, 2):
            grid = gen_grid(ctx_pi4, t)
            ints = [(z.re.coeffs[0], z.im.coeffs[0]) for z in grid]
            assert count_distinct_directions(grid) == _slope_census(ints)

    def test_two_points(self, ctx_pi4):
        assert count_distinct_directions(pts(ctx_pi4, [(0, 0), (3, 5)])) == 1

    def test_fewer_than_two_rejected(self, ctx_pi4):
        with pytest.raises(InputError):
            count_distinct_directions([pt(ctx_pi4, 0, 0)])
        with pytest.raises(InputError):
            count_distinct_directions([])

    def test_duplicate_points_rejected(self, ctx_pi4):
        with pytest.raises(InputError):
            count_distinct_directions(pts(ctx_pi4, [(0, 0), (0, 0), (1, 1)]))

    def test_collinear_points(self, ctx_pi4):
        assert count_distinct_directions(pts(ctx_pi4, [(0, 0), (1, 1), (2, 2)])) == 1

    def test_census_limit(self, ctx_pi4):
        with pytest.raises(BudgetExceeded):
            count_distinct_directions(gen_grid(ctx_pi4, 1), limit=4)

    @pytest.mark.parametrize("t", [1, 2])
    def test_lower_bound_linear(self, ctx_pi4, t):
        grid = gen_grid(ctx_pi4, t)
        assert count_distinct_directions(grid) >= len(grid) - 1

    def test_lower_bound_quadratic(self, ctx_sqrt2):
        grid = gen_grid(ctx_sqrt2, 1)
        assert count_distinct_directions(grid) >= len(grid) - 1

    def test_quadratic_grid_against_rowspace_oracle(self, ctx_sqrt2):
        # Same census by a different exact mechanism: mod-pi classes of
        # difference vectors coincide with rational rowspaces of
        # (w, alpha*w) coordinate rows.
        from angleforge.counting import _rowspace_key

        ctx = ctx_sqrt2
        grid = gen_grid(ctx, 1)
        keys = set()
        for u, w in itertools.combinations(grid, 2):
            v = w - u
            row = v.re.coeffs + v.im.coeffs
            arow = ctx.alpha_mul_coeffs(v.re.coeffs) + ctx.alpha_mul_coeffs(
                v.im.coeffs
            )
            keys.add(_rowspace_key(row, arow))
        assert count_distinct_directions(grid) == len(keys)


class TestSelection:
    def test_quota_formula(self):
        assert tier_quota(1, 1) == 4
        assert tier_quota(1, 2) == 12
        assert tier_quota(2, 1) == 16
        assert tier_quota(2, 2) == 240

    def test_linear_t2_quotas(self, ctx_pi4):
        fam = select_direction_families(ctx_pi4, 2)
        assert len(fam.tier(1)) == 4
        assert len(fam.tier(2)) == 12

    def test_quadratic_t1_quota(self, ctx_sqrt2):
        fam = select_direction_families(ctx_sqrt2, 1)
        assert len(fam.tier(1)) == 16

    def test_linear_t1_frozen(self, ctx_pi4):
        fam = select_direction_families(ctx_pi4, 1)
        assert [v.key() for v in fam.tier(1)] == [
            ((-2,), (-2,)),
            ((-2,), (-1,)),
            ((-2,), (0,)),
            ((-2,), (1,)),
        ]

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_pairwise_distinct_linear(self, ctx_pi4, t):
        fam = select_direction_families(ctx_pi4, t)
        vectors = fam.all_vectors()
        total = sum(tier_quota(1, k) for k in range(1, t + 1))
        assert len(vectors) == total == (2 * t) ** 2
        for u, v in itertools.combinations(vectors, 2):
            assert not cross(u, v).is_zero()
        assert_pairwise_distinct_directions(vectors)

    def test_pairwise_distinct_quadratic(self, ctx_sqrt2):
        fam = select_direction_families(ctx_sqrt2, 1)
        for u, v in itertools.combinations(fam.all_vectors(), 2):
            assert not cross(u, v).is_zero()

    def test_vectors_live_in_scaled_grid(self, ctx_pi4):
        fam = select_direction_families(ctx_pi4, 3)
        for k in (1, 2, 3):
            for v in fam.tier(k):
                assert v.grid_norm() <= 2 * k
                assert not v.is_zero()

    def test_deterministic(self, ctx_sqrt2):
        a = select_direction_families(ctx_sqrt2, 1)
        b = select_direction_families(ctx_sqrt2, 1)
        assert [v.key() for v in a.all_vectors()] == [
            v.key() for v in b.all_vectors()
        ]

    def test_t_must_be_positive(self, ctx_pi4):
        with pytest.raises(InputError):
            select_direction_families(ctx_pi4, 0)
