"""Exact arithmetic in the ring Z[alpha] for a real algebraic integer alpha.

An angle theta with algebraic tangent is handled through the pair (alpha, b)
with tan(theta) = alpha / b, where alpha > 0 is a root of a monic integer
polynomial of degree d.  Ring elements are length-d integer coordinate
vectors over the power basis 1, alpha, ..., alpha^(d-1); because the minimal
polynomial is irreducible, the representation is unique and the zero test is
a plain all-zero check on coordinates.

Sign determination never touches floating point: a rational isolating
interval for alpha is bisected (exactly) until the interval evaluation of an
element excludes zero.
"""
from __future__ import annotations

import warnings
from fractions import Fraction
from math import gcd

from .errors import InputError, InvariantViolation, RationalRootWarning

# Bisection rounds allowed within a single sign query.  Any nonzero element
# with desk-scale coordinates separates from zero far sooner; hitting this
# cap means the "irreducible minimal polynomial" precondition was violated.
_MAX_REFINE = 2000

# Trial-division budget for the rational-root sanity check.
_DIVISOR_SCAN_CAP = 10 ** 6


def _poly_eval(coeffs, x):
    """Evaluate a polynomial (ascending coefficients) at x by Horner."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def normalize_tangent(coeffs, interval):
    """Turn an integer polynomial with root tan(theta) into monic form.

    Given p with integer coefficients (ascending, leading coefficient L != 0)
    and a rational interval isolating the intended real root r = tan(theta),
    produce (q, b, iso) where q is monic with integer coefficients, b = +/-L,
    alpha = b * r > 0 is a root of q, and iso is a positive rational interval
    isolating alpha.  The identity alpha / b = r is exact.
    """
    p = tuple(int(c) for c in coeffs)
    if len(p) < 2:
        raise InputError("tangent polynomial must have degree >= 1")
    lead = p[-1]
    if lead == 0:
        raise InputError("tangent polynomial has zero leading coefficient")
    d = len(p) - 1

    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if not lo < hi:
        raise InputError("root interval must satisfy lo < hi")
    s_lo = _sign(_poly_eval(p, lo))
    s_hi = _sign(_poly_eval(p, hi))
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise InputError("interval endpoints must give a strict sign change")

    # Shrink until the interval lies strictly on one side of zero, which
    # both fixes the sign of the root and yields a positive interval after
    # scaling.  An exact rational root hit mid-bisection is bracketed tightly.
    while not (lo > 0 or hi < 0):
        mid = (lo + hi) / 2
        v = _poly_eval(p, mid)
        if v == 0:
            if mid == 0:
                raise InputError("tan(theta) = 0 does not define an angle in (0, pi)")
            w = min(mid - lo, hi - mid) / 2
            while mid - w <= 0 <= mid + w:
                w /= 2
            lo, hi = mid - w, mid + w
            break
        if _sign(v) == s_lo:
            lo = mid
        else:
            hi = mid

    root_positive = lo > 0
    b = lead if (lead > 0) == root_positive else -lead

    # q(y) = (b^d / L) * p(y / b) is monic with integer coefficients.
    q = []
    for i, c in enumerate(p):
        num = c * b ** (d - i)
        if num % lead:
            raise InvariantViolation("monic rescaling produced a non-integer")
        q.append(num // lead)
    assert q[-1] == 1

    iso = (b * lo, b * hi)
    if iso[0] > iso[1]:
        iso = (iso[1], iso[0])
    return tuple(q), b, iso


def _warn_if_rational_root(q, d):
    # Rational root theorem: q is monic, so any rational root is an integer
    # dividing the constant term.  Scan divisors by trial division, capped.
    q0 = q[0]
    if q0 == 0:
        warnings.warn(
            "minimal polynomial has root 0 and cannot be irreducible",
            RationalRootWarning,
            stacklevel=3,
        )
        return
    n = abs(q0)
    divisors = set()
    k = 1
    while k * k <= n and k <= _DIVISOR_SCAN_CAP:
        if n % k == 0:
            divisors.add(k)
            divisors.add(n // k)
        k += 1
    for r in sorted(divisors):
        for cand in (r, -r):
            if _poly_eval(q, cand) == 0:
                warnings.warn(
                    f"minimal polynomial has rational root {cand}; "
                    "it is not irreducible, so exact zero tests are unsound",
                    RationalRootWarning,
                    stacklevel=3,
                )
                return


class AlgebraicContext:
    """The arithmetic universe for one angle: alpha's relation and constants.

    Immutable after creation apart from an internal cache that narrows the
    isolating interval; the cache is replaced wholesale (a single attribute
    assignment), so instances are safe to share across threads.

    Attributes
    ----------
    degree : d, the degree of the monic minimal polynomial.
    minpoly : its coefficients, constant term first, leading term 1.
    reduction : c_0..c_{d-1} with alpha^d = c_0 + c_1 alpha + ...
    b : the integer with tan(theta) = alpha / b (negative for obtuse theta).
    iso_lo, iso_hi : the isolating interval for alpha as originally supplied.
    alpha_growth : 1 + max |c_i|; coordinate growth when multiplying by alpha.
    ring_growth : d * alpha_growth^(d-1); growth factor for ring products.
    complex_growth : 2 * ring_growth; growth factor for complex products.
    size_factor : (4|b| complex_growth^2 + 3)^(2d); the point-count factor
        in the t-from-n sizing rule.
    """

    def __init__(self, minpoly, b, iso, *, allow_right_angle=False):
        q = tuple(int(c) for c in minpoly)
        if len(q) < 2:
            raise InputError("minimal polynomial must have degree >= 1")
        if q[-1] != 1:
            raise InputError("minimal polynomial must be monic")
        self.minpoly = q
        self.degree = len(q) - 1
        self.reduction = tuple(-c for c in q[:-1])

        self.b = int(b)
        if self.b == 0 and not allow_right_angle:
            raise InputError(
                "b = 0 encodes a right angle (tan undefined); "
                "pass allow_right_angle=True to opt in"
            )

        lo, hi = Fraction(iso[0]), Fraction(iso[1])
        if not 0 < lo < hi:
            raise InputError("isolating interval must satisfy 0 < lo < hi")
        s_lo = _sign(_poly_eval(q, lo))
        s_hi = _sign(_poly_eval(q, hi))
        if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
            raise InputError("minimal polynomial must change sign across the interval")
        self.iso_lo, self.iso_hi = lo, hi
        self._q_lo_sign = s_lo

        if self.degree >= 2:
            _warn_if_rational_root(q, self.degree)

        d = self.degree
        self.alpha_growth = 1 + max(abs(c) for c in self.reduction)
        self.ring_growth = d * self.alpha_growth ** (d - 1)
        self.complex_growth = 2 * self.ring_growth
        self.size_factor = (4 * abs(self.b) * self.complex_growth ** 2 + 3) ** (2 * d)

        # Sign-machinery cache: current enclosure of alpha plus integer-scaled
        # power tables; replaced atomically by _refine_enclosure.
        self._cache = self._build_cache(lo, hi)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraicContext):
            return NotImplemented
        return self.minpoly == other.minpoly and self.b == other.b

    def __hash__(self):
        return hash((self.minpoly, self.b))

    def __repr__(self):
        return f"AlgebraicContext(minpoly={self.minpoly}, b={self.b})"

    def compatible(self, other: AlgebraicContext) -> bool:
        return self == other

    # -- elements ---------------------------------------------------------

    def element(self, coeffs) -> AlgebraicInt:
        return AlgebraicInt(self, coeffs)

    def alpha_coeffs(self):
        """alpha as a coordinate vector (for d = 1 alpha is the integer c_0)."""
        if self.degree == 1:
            return (self.reduction[0],)
        return (0, 1) + (0,) * (self.degree - 2)

    # -- exact ring operations on raw coordinate tuples -------------------
    # These are the hot-path kernels; AlgebraicInt wraps them.

    def mul_coeffs(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        red = self.reduction
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                base = i - d
                for j, rj in enumerate(red):
                    conv[base + j] += c * rj
        return tuple(conv[:d])

    def alpha_mul_coeffs(self, a):
        """Multiply by alpha: shift coordinates and fold the top one back."""
        d = self.degree
        if d == 1:
            return (a[0] * self.reduction[0],)
        top = a[d - 1]
        shifted = (0,) + a[: d - 1]
        if not top:
            return shifted
        return tuple(s + top * r for s, r in zip(shifted, self.reduction))

    # -- sign machinery ---------------------------------------------------

    def _build_cache(self, lo: Fraction, hi: Fraction):
        d = self.degree
        den = lo.denominator * hi.denominator // gcd(lo.denominator, hi.denominator)
        ln = lo.numerator * (den // lo.denominator)
        hn = hi.numerator * (den // hi.denominator)
        # Scaled power tables: value * den^(d-1) is enclosed by integer sums.
        lo_pows = tuple(ln ** k * den ** (d - 1 - k) for k in range(d))
        hi_pows = tuple(hn ** k * den ** (d - 1 - k) for k in range(d))
        return (lo, hi, lo_pows, hi_pows)

    def _refine_enclosure(self):
        lo, hi = self._cache[0], self._cache[1]
        mid = (lo + hi) / 2
        s = _sign(_poly_eval(self.minpoly, mid))
        if s == 0:
            raise InvariantViolation(
                f"alpha collapsed to the rational {mid}; the minimal polynomial "
                "is reducible, violating the soundness precondition"
            )
        if s == self._q_lo_sign:
            lo = mid
        else:
            hi = mid
        self._cache = self._build_cache(lo, hi)

    def sign_of_coeffs(self, coeffs) -> int:
        if not any(coeffs):
            return 0
        if self.degree == 1:
            return _sign(coeffs[0])
        for _ in range(_MAX_REFINE):
            _, _, lo_pows, hi_pows = self._cache
            lo_sum = 0
            hi_sum = 0
            for k, c in enumerate(coeffs):
                if c > 0:
                    lo_sum += c * lo_pows[k]
                    hi_sum += c * hi_pows[k]
                elif c < 0:
                    lo_sum += c * hi_pows[k]
                    hi_sum += c * lo_pows[k]
            if lo_sum > 0:
                return 1
            if hi_sum < 0:
                return -1
            self._refine_enclosure()
        raise InvariantViolation(
            "sign refinement did not separate a nonzero element from zero; "
            "the minimal polynomial is not irreducible"
        )

    def alpha_enclosure(self, max_width: Fraction | None = None):
        """Current rational enclosure of alpha, refined below max_width if given."""
        if self.degree == 1:
            root = Fraction(-self.minpoly[0])
            return (root, root)
        if max_width is not None:
            while self._cache[1] - self._cache[0] > max_width:
                self._refine_enclosure()
        return (self._cache[0], self._cache[1])

    def value_enclosure(self, coeffs, max_width: Fraction):
        """A rational interval of width <= max_width around sum(a_k alpha^k)."""
        if self.degree == 1:
            v = Fraction(coeffs[0])
            return (v, v)
        while True:
            lo, hi, _, _ = self._cache
            vlo = Fraction(0)
            vhi = Fraction(0)
            pl, ph = Fraction(1), Fraction(1)
            for c in coeffs:
                if c > 0:
                    vlo += c * pl
                    vhi += c * ph
                elif c < 0:
                    vlo += c * ph
                    vhi += c * pl
                pl *= lo
                ph *= hi
            if vhi - vlo <= max_width:
                return (vlo, vhi)
            self._refine_enclosure()


def context_from_minpoly(minpoly, b, iso, *, allow_right_angle=False) -> AlgebraicContext:
    """Build a context from a monic integer polynomial, b, and an interval."""
    return AlgebraicContext(minpoly, b, iso, allow_right_angle=allow_right_angle)


def context_from_tangent(coeffs, interval, *, allow_right_angle=False) -> AlgebraicContext:
    """normalize_tangent followed by context creation, as one step."""
    q, b, iso = normalize_tangent(coeffs, interval)
    return AlgebraicContext(q, b, iso, allow_right_angle=allow_right_angle)


class AlgebraicInt:
    """An element of Z[alpha]: an integer coordinate vector over the basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraicContext, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ctx.degree:
            raise InputError(
                f"expected {ctx.degree} coordinates, got {len(coeffs)}"
            )
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, (0,) * ctx.degree)

    @classmethod
    def one(cls, ctx):
        return cls.from_int(ctx, 1)

    @classmethod
    def from_int(cls, ctx, n: int):
        return cls(ctx, (n,) + (0,) * (ctx.degree - 1))

    @classmethod
    def alpha(cls, ctx):
        return cls(ctx, ctx.alpha_coeffs())

    def _check(self, other: AlgebraicInt):
        if self.ctx != other.ctx:
            raise InputError("operands belong to different contexts")

    def __add__(self, other):
        if not isinstance(other, AlgebraicInt):
            return NotImplemented
        self._check(other)
        return AlgebraicInt(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraicInt):
            return NotImplemented
        self._check(other)
        return AlgebraicInt(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraicInt(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraicInt(self.ctx, tuple(other * a for a in self.coeffs))
        if not isinstance(other, AlgebraicInt):
            return NotImplemented
        self._check(other)
        return AlgebraicInt(self.ctx, self.ctx.mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraicInt):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"AlgebraicInt{self.coeffs}"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def sign(self) -> int:
        """-1, 0 or +1, decided exactly (interval bisection, never floats)."""
        return self.ctx.sign_of_coeffs(self.coeffs)

    def infinity_norm(self) -> int:
        return max(abs(a) for a in self.coeffs)
