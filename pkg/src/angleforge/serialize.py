"""JSON and CSV input/output.

All unbounded integer values (polynomial coefficients, b, point
coordinates, counts) are written as decimal strings so no reader can lose
precision; array indices inside a triples file stay plain JSON integers.
Interval endpoints are written as "p/q" fraction strings.  Writers emit a
fixed key order and fixed formatting, so identical data produces identical
bytes.  Readers accept both raw integers and decimal strings.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .algebraic import AlgebraicContext, AlgebraicInt
from .errors import InputError
from .planar import PlanePoint

SCHEMA = "angleforge/1"


# -- primitive encoders / decoders ----------------------------------------

def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise InputError(f"{what}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError:
            raise InputError(f"{what}: not a decimal integer: {value!r}") from None
    raise InputError(f"{what}: expected an integer or decimal string")


def _as_fraction(value, what: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{what}: expected a fraction, got a boolean")
    if isinstance(value, (int, str)):
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{what}: not a fraction: {value!r}") from None
    raise InputError(f"{what}: expected a fraction string like 'p/q'")


def _int_list(values, what: str):
    if not isinstance(values, list):
        raise InputError(f"{what}: expected a list")
    return [_as_int(v, what) for v in values]


# -- context ---------------------------------------------------------------

def context_to_obj(ctx: AlgebraicContext) -> dict:
    return {
        "minpoly": [str(c) for c in ctx.minpoly],
        "b": str(ctx.b),
        "iso": [str(ctx.iso_lo), str(ctx.iso_hi)],
    }


def context_from_obj(obj, *, allow_right_angle: bool = False) -> AlgebraicContext:
    if not isinstance(obj, dict):
        raise InputError("context: expected a JSON object")
    for key in ("minpoly", "b", "iso"):
        if key not in obj:
            raise InputError(f"context: missing field {key!r}")
    minpoly = _int_list(obj["minpoly"], "context.minpoly")
    b = _as_int(obj["b"], "context.b")
    iso = obj["iso"]
    if not isinstance(iso, list) or len(iso) != 2:
        raise InputError("context.iso: expected [lo, hi]")
    lo = _as_fraction(iso[0], "context.iso[0]")
    hi = _as_fraction(iso[1], "context.iso[1]")
    return AlgebraicContext(minpoly, b, (lo, hi),
                            allow_right_angle=allow_right_angle)


# -- points and triples ----------------------------------------------------

def point_to_obj(p: PlanePoint) -> dict:
    return {
        "re": [str(c) for c in p.re.coeffs],
        "im": [str(c) for c in p.im.coeffs],
    }


def point_from_obj(ctx: AlgebraicContext, obj) -> PlanePoint:
    if not isinstance(obj, dict) or "re" not in obj or "im" not in obj:
        raise InputError("point: expected an object with 're' and 'im'")
    re = _int_list(obj["re"], "point.re")
    im = _int_list(obj["im"], "point.im")
    if len(re) != ctx.degree or len(im) != ctx.degree:
        raise InputError(
            f"point: expected {ctx.degree} coordinates per component"
        )
    return PlanePoint(AlgebraicInt(ctx, re), AlgebraicInt(ctx, im))


def points_doc(ctx: AlgebraicContext, points) -> dict:
    return {
        "schema": SCHEMA,
        "context": context_to_obj(ctx),
        "points": [point_to_obj(p) for p in points],
    }


def triples_doc(ctx: AlgebraicContext, points, index_triples) -> dict:
    doc = points_doc(ctx, points)
    doc["triples"] = [list(tri) for tri in index_triples]
    return doc


def check_schema(doc) -> None:
    if not isinstance(doc, dict):
        raise InputError("document: expected a JSON object")
    if doc.get("schema") != SCHEMA:
        raise InputError(
            f"document: expected schema {SCHEMA!r}, got {doc.get('schema')!r}"
        )


def parse_points_doc(doc, *, ctx: AlgebraicContext | None = None):
    """Read {"schema", "context", "points"}; an explicit ctx overrides the
    embedded one (the point coordinates are reinterpreted in that ring)."""
    check_schema(doc)
    if ctx is None:
        if "context" not in doc:
            raise InputError("document: missing 'context'")
        ctx = context_from_obj(doc["context"])
    if "points" not in doc or not isinstance(doc["points"], list):
        raise InputError("document: missing 'points' list")
    points = [point_from_obj(ctx, o) for o in doc["points"]]
    return ctx, points


def parse_triples_doc(doc, *, ctx: AlgebraicContext | None = None):
    ctx, points = parse_points_doc(doc, ctx=ctx)
    raw = doc.get("triples")
    if not isinstance(raw, list):
        raise InputError("document: missing 'triples' list")
    n = len(points)
    triples = []
    for tri in raw:
        if not isinstance(tri, list) or len(tri) != 3:
            raise InputError("triples: each entry must be [apex, p1, p2]")
        idx = tuple(_as_int(i, "triples index") for i in tri)
        if any(i < 0 or i >= n for i in idx):
            raise InputError(f"triples: index out of range in {idx}")
        triples.append(idx)
    return ctx, points, triples


# -- files -----------------------------------------------------------------

def dump_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def write_json(path, doc) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_json(doc))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


def read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


# -- decimal CSV rendering of points ---------------------------------------

def format_fraction(f: Fraction, digits: int) -> str:
    """Fixed-point decimal with exactly `digits` fractional digits."""
    scale = 10 ** digits
    q = round(f * scale)
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // scale}.{q % scale:0{digits}d}"


def points_csv(ctx: AlgebraicContext, points, digits: int = 30) -> str:
    """Two-column high-precision decimal rendering, for plotting."""
    width = Fraction(1, 10 ** (digits + 2))
    lines = ["x,y"]
    for p in points:
        cells = []
        for coeffs in (p.re.coeffs, p.im.coeffs):
            lo, hi = ctx.value_enclosure(coeffs, width)
            cells.append(format_fraction((lo + hi) / 2, digits))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
