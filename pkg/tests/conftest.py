import warnings
from fractions import Fraction

import pytest

from angleforge import AlgebraicContext, PlanePoint


@pytest.fixture(scope="session")
def ctx_pi4():
    """tan(theta) = 1, theta = pi/4: minpoly y - 1, b = 1."""
    return AlgebraicContext((-1, 1), 1, (Fraction(1, 2), Fraction(3, 2)))


@pytest.fixture(scope="session")
def ctx_sqrt2():
    """tan(theta) = sqrt(2): minpoly y^2 - 2, b = 1."""
    return AlgebraicContext((-2, 0, 1), 1, (Fraction(5, 4), Fraction(3, 2)))


@pytest.fixture(scope="session")
def ctx_pi6():
    """tan(theta) = sqrt(3)/3, theta = pi/6: minpoly y^2 - 3, b = 3."""
    return AlgebraicContext((-3, 0, 1), 3, (Fraction(3, 2), Fraction(2)))


@pytest.fixture(scope="session")
def ctx_cubic():
    """alpha = cbrt(2): minpoly y^3 - 2, b = 1."""
    return AlgebraicContext((-2, 0, 0, 1), 1, (Fraction(5, 4), Fraction(4, 3)))


@pytest.fixture(scope="session")
def ctx_obtuse():
    """tan(theta) = -1, theta = 3*pi/4: minpoly y - 1, b = -1."""
    return AlgebraicContext((-1, 1), -1, (Fraction(1, 2), Fraction(3, 2)))


@pytest.fixture(scope="session")
def ctx_reducible():
    """y^2 - 1 is not irreducible; exercises the unsoundness escape hatch."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return AlgebraicContext((-1, 0, 1), 1, (Fraction(1, 2), Fraction(3, 2)))


def pt(ctx, x: int, y: int) -> PlanePoint:
    return PlanePoint.from_ints(ctx, x, y)


def pts(ctx, pairs):
    return [PlanePoint.from_ints(ctx, x, y) for x, y in pairs]
