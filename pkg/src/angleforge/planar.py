"""The plane as complex numbers with coordinates in Z[alpha].

Exact predicates live here: cross/dot for direction comparisons and the
theta-angle classifier used by both the construction and the counters.
"""
from __future__ import annotations

from enum import Enum

from .algebraic import AlgebraicContext, AlgebraicInt
from .errors import InputError


class AngleMatch(Enum):
    """Outcome of the angle predicate at an apex."""

    PLUS = "theta_plus"    # second arm is the first rotated by +theta
    MINUS = "theta_minus"  # second arm is the first rotated by -theta
    NONE = "none"

    def swapped(self) -> AngleMatch:
        if self is AngleMatch.PLUS:
            return AngleMatch.MINUS
        if self is AngleMatch.MINUS:
            return AngleMatch.PLUS
        return self


class PlanePoint:
    """A point (or vector) re + i*im with re, im in Z[alpha]."""

    __slots__ = ("re", "im")

    def __init__(self, re: AlgebraicInt, im: AlgebraicInt):
        if re.ctx != im.ctx:
            raise InputError("re and im belong to different contexts")
        self.re = re
        self.im = im

    @property
    def ctx(self) -> AlgebraicContext:
        return self.re.ctx

    @classmethod
    def zero(cls, ctx):
        z = AlgebraicInt.zero(ctx)
        return cls(z, z)

    @classmethod
    def from_coeffs(cls, ctx, re_coeffs, im_coeffs):
        return cls(AlgebraicInt(ctx, re_coeffs), AlgebraicInt(ctx, im_coeffs))

    @classmethod
    def from_ints(cls, ctx, x: int, y: int):
        return cls(AlgebraicInt.from_int(ctx, x), AlgebraicInt.from_int(ctx, y))

    def __add__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        return PlanePoint(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        return PlanePoint(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return PlanePoint(-self.re, -self.im)

    def __mul__(self, other):
        """Exact complex product; also accepts a real scalar from Z[alpha]."""
        if isinstance(other, AlgebraicInt):
            return PlanePoint(self.re * other, self.im * other)
        if not isinstance(other, PlanePoint):
            return NotImplemented
        return PlanePoint(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> PlanePoint:
        return PlanePoint(self.re, -self.im)

    def __eq__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re.coeffs, self.im.coeffs))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"PlanePoint(re={self.re.coeffs}, im={self.im.coeffs})"

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def grid_norm(self) -> int:
        """max of the two coordinate infinity-norms; membership radius in the grid."""
        return max(self.re.infinity_norm(), self.im.infinity_norm())

    def key(self):
        """Canonical sort/dedup key (lexicographic on coordinate vectors)."""
        return (self.re.coeffs, self.im.coeffs)


def cross(u: PlanePoint, v: PlanePoint) -> AlgebraicInt:
    """Im(conj(u) * v); zero exactly when u and v are parallel (mod pi)."""
    return u.re * v.im - u.im * v.re


def dot(u: PlanePoint, v: PlanePoint) -> AlgebraicInt:
    """Re(conj(u) * v); with cross = 0, positive exactly on a shared ray."""
    return u.re * v.re + u.im * v.im


def theta_rotor(ctx: AlgebraicContext) -> PlanePoint:
    """The complex number b + i*alpha, whose argument is theta."""
    return PlanePoint(AlgebraicInt.from_int(ctx, ctx.b), AlgebraicInt.alpha(ctx))


def rotor_norm(ctx: AlgebraicContext) -> int:
    """Grid norm of b + i*alpha (max(|b|, 1) whenever d >= 2)."""
    return theta_rotor(ctx).grid_norm()


def rotate_theta(v: PlanePoint) -> PlanePoint:
    """Rotate-and-scale v by theta, i.e. multiply by b + i*alpha."""
    if v.is_zero():
        raise InputError("cannot rotate the zero vector")
    return v * theta_rotor(v.ctx)


def angle_at(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> AngleMatch:
    """Classify whether the angle at apex p between q and r equals theta.

    With u = q - p, w = r - p and Z = w * conj(u), arg Z is the signed angle
    from u to w.  Z is a positive real multiple of b + i*alpha exactly when
    X*alpha - Y*b = 0 and Y > 0 (X = Re Z, Y = Im Z), since alpha > 0; the
    mirrored test detects rotation by -theta.  All tests are exact.
    """
    u = q - p
    w = r - p
    if u.is_zero() or w.is_zero():
        raise InputError("angle predicate requires pairwise distinct points")
    ctx = p.ctx
    z = w * u.conj()
    x_alpha = AlgebraicInt(ctx, ctx.alpha_mul_coeffs(z.re.coeffs))
    y_b = z.im * ctx.b
    if (x_alpha - y_b).is_zero() and z.im.sign() > 0:
        return AngleMatch.PLUS
    if (x_alpha + y_b).is_zero() and z.im.sign() < 0:
        return AngleMatch.MINUS
    return AngleMatch.NONE
