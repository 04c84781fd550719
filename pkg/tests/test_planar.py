import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from angleforge import (
    AlgebraicInt,
    AngleMatch,
    InputError,
    PlanePoint,
    angle_at,
    cross,
    dot,
    rotate_theta,
    theta_rotor,
)
from angleforge.planar import rotor_norm

from conftest import pt


# ---------------------------------------------------------------- points

class TestPlanePoint:
    def test_constructors(self, ctx_sqrt2):
        z = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, 4))
        assert z.re.coeffs == (1, 2)
        assert z.im.coeffs == (3, 4)
        assert PlanePoint.zero(ctx_sqrt2).is_zero()
        assert pt(ctx_sqrt2, 2, -1).key() == ((2, 0), (-1, 0))

    def test_vector_ops(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, 4))
        b = PlanePoint.from_coeffs(ctx_sqrt2, (5, -1), (0, 2))
        assert (a + b).key() == ((6, 1), (3, 6))
        assert (a - b).key() == ((-4, 3), (3, 2))
        assert (-a).key() == ((-1, -2), (-3, -4))

    def test_scalar_mul(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 0), (0, 1))
        lam = ctx_sqrt2.element((0, 1))
        assert (a * lam).key() == ((0, 1), (2, 0))

    def test_complex_mul(self, ctx_pi4):
        # (2 + i)(1 + i) = 1 + 3i
        assert (pt(ctx_pi4, 2, 1) * pt(ctx_pi4, 1, 1)).key() == ((1,), (3,))

    def test_complex_mul_matches_formula(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, -1))
        b = PlanePoint.from_coeffs(ctx_sqrt2, (-2, 1), (0, 4))
        prod = a * b
        assert prod.re == a.re * b.re - a.im * b.im
        assert prod.im == a.re * b.im + a.im * b.re

    def test_conj(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, 4))
        assert a.conj().key() == ((1, 2), (-3, -4))

    def test_grid_norm(self, ctx_pi4, ctx_sqrt2):
        assert pt(ctx_pi4, 2, 3).grid_norm() == 3
        assert PlanePoint.from_coeffs(ctx_sqrt2, (1, -4), (2, 0)).grid_norm() == 4

    def test_equality_hash(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, 4))
        b = PlanePoint.from_coeffs(ctx_sqrt2, (2, 2), (3, 4)) - pt(ctx_sqrt2, 1, 0)
        assert a == b and hash(a) == hash(b)
        assert a != PlanePoint.zero(ctx_sqrt2)

    def test_cross_dot_values(self, ctx_pi4):
        a, b = pt(ctx_pi4, 1, 2), pt(ctx_pi4, 3, 4)
        assert cross(a, b).coeffs == (-2,)
        assert dot(a, b).coeffs == (11,)

    def test_cross_antisymmetry_dot_symmetry(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, -1))
        b = PlanePoint.from_coeffs(ctx_sqrt2, (-2, 1), (0, 4))
        assert cross(a, b) == -cross(b, a)
        assert dot(a, b) == dot(b, a)

    def test_cross_via_conj_product(self, ctx_sqrt2):
        a = PlanePoint.from_coeffs(ctx_sqrt2, (1, 2), (3, -1))
        b = PlanePoint.from_coeffs(ctx_sqrt2, (-2, 1), (0, 4))
        z = b * a.conj()
        assert z.re == dot(a, b)
        assert z.im == cross(a, b)


_COEFF = st.integers(min_value=-20, max_value=20)


def _points(ctx):
    coords = st.tuples(*([_COEFF] * ctx.degree))
    return st.tuples(coords, coords).map(
        lambda p: PlanePoint.from_coeffs(ctx, p[0], p[1])
    )


class TestComplexRing:
    @settings(max_examples=120, deadline=None, derandomize=True)
    @given(data=st.data())
    def test_mul_ring_laws(self, data, ctx_sqrt2):
        a = data.draw(_points(ctx_sqrt2))
        b = data.draw(_points(ctx_sqrt2))
        c = data.draw(_points(ctx_sqrt2))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=120, deadline=None, derandomize=True)
    @given(data=st.data())
    def test_product_norm_containment(self, data, ctx_sqrt2):
        a = data.draw(_points(ctx_sqrt2))
        b = data.draw(_points(ctx_sqrt2))
        bound = ctx_sqrt2.complex_growth * a.grid_norm() * b.grid_norm()
        assert (a * b).grid_norm() <= bound


# ---------------------------------------------------------------- rotor

class TestRotor:
    def test_rotor_coordinates(self, ctx_pi4, ctx_sqrt2, ctx_pi6):
        assert theta_rotor(ctx_pi4).key() == ((1,), (1,))
        assert theta_rotor(ctx_sqrt2).key() == ((1, 0), (0, 1))
        assert theta_rotor(ctx_pi6).key() == ((3, 0), (0, 1))

    def test_rotor_norm(self, ctx_pi4, ctx_sqrt2, ctx_pi6):
        assert rotor_norm(ctx_pi4) == 1
        assert rotor_norm(ctx_sqrt2) == 1
        assert rotor_norm(ctx_pi6) == 3

    def test_rotate_is_rotor_product(self, ctx_sqrt2):
        v = PlanePoint.from_coeffs(ctx_sqrt2, (2, -1), (1, 3))
        assert rotate_theta(v) == theta_rotor(ctx_sqrt2) * v

    def test_rotate_example(self, ctx_pi4):
        assert rotate_theta(pt(ctx_pi4, 2, 1)).key() == ((1,), (3,))

    def test_rotate_rejects_zero(self, ctx_pi4):
        with pytest.raises(InputError):
            rotate_theta(PlanePoint.zero(ctx_pi4))

    def test_rotated_vector_realizes_angle(self, ctx_pi4, ctx_sqrt2, ctx_pi6):
        rng = random.Random(7)
        for ctx in (ctx_pi4, ctx_sqrt2, ctx_pi6):
            for _ in range(50):
                coeffs = lambda: tuple(
                    rng.randint(-9, 9) for _ in range(ctx.degree)
                )
                v = PlanePoint.from_coeffs(ctx, coeffs(), coeffs())
                if v.is_zero():
                    continue
                p = PlanePoint.from_coeffs(ctx, coeffs(), coeffs())
                assert angle_at(p, p + v, p + rotate_theta(v)) is AngleMatch.PLUS


# ---------------------------------------------------------------- predicate

class TestAnglePredicate:
    def test_quarter_turn_examples(self, ctx_pi4):
        p, q = pt(ctx_pi4, 0, 0), pt(ctx_pi4, 1, 0)
        assert angle_at(p, q, pt(ctx_pi4, 1, 1)) is AngleMatch.PLUS
        assert angle_at(p, q, pt(ctx_pi4, 0, 1)) is AngleMatch.NONE
        assert angle_at(p, pt(ctx_pi4, 1, 1), q) is AngleMatch.MINUS

    def test_sqrt2_example(self, ctx_sqrt2):
        p = PlanePoint.zero(ctx_sqrt2)
        q = pt(ctx_sqrt2, 1, 0)
        r = PlanePoint.from_coeffs(ctx_sqrt2, (1, 0), (0, 1))
        assert angle_at(p, q, r) is AngleMatch.PLUS
        assert angle_at(p, r, q) is AngleMatch.MINUS

    def test_collinear_is_none(self, ctx_pi4):
        p = pt(ctx_pi4, 0, 0)
        assert angle_at(p, pt(ctx_pi4, 1, 1), pt(ctx_pi4, 2, 2)) is AngleMatch.NONE
        assert angle_at(p, pt(ctx_pi4, 1, 0), pt(ctx_pi4, -3, 0)) is AngleMatch.NONE

    def test_degenerate_rejected(self, ctx_pi4):
        p = pt(ctx_pi4, 0, 0)
        with pytest.raises(InputError):
            angle_at(p, p, pt(ctx_pi4, 1, 1))
        with pytest.raises(InputError):
            angle_at(p, pt(ctx_pi4, 1, 1), p)

    def test_obtuse_context(self, ctx_obtuse):
        # tan(theta) = -1 encodes theta = 3*pi/4.
        p, q = pt(ctx_obtuse, 0, 0), pt(ctx_obtuse, 1, 0)
        assert angle_at(p, q, pt(ctx_obtuse, -1, 1)) is AngleMatch.PLUS
        assert angle_at(p, q, pt(ctx_obtuse, 1, 1)) is AngleMatch.NONE

    def test_swapped_enum(self):
        assert AngleMatch.PLUS.swapped() is AngleMatch.MINUS
        assert AngleMatch.MINUS.swapped() is AngleMatch.PLUS
        assert AngleMatch.NONE.swapped() is AngleMatch.NONE

    @settings(max_examples=150, deadline=None, derandomize=True)
    @given(data=st.data())
    def test_swap_translation_scaling_invariance(self, data, ctx_sqrt2):
        ctx = ctx_sqrt2
        p = data.draw(_points(ctx))
        q = data.draw(_points(ctx))
        r = data.draw(_points(ctx))
        if p == q or p == r:
            return
        m = angle_at(p, q, r)
        assert angle_at(p, r, q) is m.swapped()
        shift = data.draw(_points(ctx))
        assert angle_at(p + shift, q + shift, r + shift) is m
        k = data.draw(st.integers(min_value=1, max_value=5))
        lam = AlgebraicInt.from_int(ctx, k)
        assert angle_at(p, p + (q - p) * lam, r) is m

    def test_positive_algebraic_scaling_invariance(self, ctx_sqrt2):
        ctx = ctx_sqrt2
        p = pt(ctx, 0, 0)
        q = pt(ctx, 1, 0)
        r = PlanePoint.from_coeffs(ctx, (1, 0), (0, 1))
        lam = ctx.element((1, 1))
        assert lam.sign() == 1
        for a, b in [(q, r), (r, q)]:
            before = angle_at(p, a, b)
            assert angle_at(p, p + (a - p) * lam, b) is before


def _mp_angle_setup(ctx):
    lo, hi = ctx.alpha_enclosure(Fraction(1, 10**45))
    alpha = (mpmath.mpf(lo.numerator) / lo.denominator
             + mpmath.mpf(hi.numerator) / hi.denominator) / 2
    theta = mpmath.atan2(alpha, ctx.b)
    return alpha, theta


class TestFloatConsistency:
    def test_random_triples_against_float_angles(
        self, ctx_pi4, ctx_sqrt2, ctx_pi6
    ):
        rng = random.Random(99)
        threshold = mpmath.mpf(10) ** -30
        with mpmath.workprec(300):
            for ctx in (ctx_pi4, ctx_sqrt2, ctx_pi6):
                alpha, theta = _mp_angle_setup(ctx)

                def value(coeffs):
                    return mpmath.fsum(
                        c * alpha**i for i, c in enumerate(coeffs)
                    )

                checked = 0
                while checked < 3400:
                    coords = [
                        tuple(rng.randint(-15, 15) for _ in range(ctx.degree))
                        for _ in range(6)
                    ]
                    p = PlanePoint.from_coeffs(ctx, coords[0], coords[1])
                    q = PlanePoint.from_coeffs(ctx, coords[2], coords[3])
                    r = PlanePoint.from_coeffs(ctx, coords[4], coords[5])
                    if p == q or p == r:
                        continue
                    checked += 1
                    match = angle_at(p, q, r)
                    u = q - p
                    w = r - p
                    arg = mpmath.atan2(
                        value(w.im.coeffs), value(w.re.coeffs)
                    ) - mpmath.atan2(value(u.im.coeffs), value(u.re.coeffs))
                    while arg > mpmath.pi:
                        arg -= 2 * mpmath.pi
                    while arg <= -mpmath.pi:
                        arg += 2 * mpmath.pi
                    if match is AngleMatch.PLUS:
                        assert abs(arg - theta) < threshold
                    elif match is AngleMatch.MINUS:
                        assert abs(arg + theta) < threshold
                    else:
                        assert abs(arg - theta) > threshold
                        assert abs(arg + theta) > threshold
