"""Command-line entry point wiring the whole pipeline.

Subcommands: normalize (tangent polynomial to context), construct (build the
triple family), count (brute/fast triple counting on a point file),
verify-ungar (direction census against the N-1 bound), sweep (counts vs
n^2 ln n across t), angle-check (the exact predicate on three points).

Exit codes: 0 success, 1 invalid input or exceeded budget, 2 violated
mathematical invariant (a bug in the code or a false claim, never user
error).  Errors are emitted as a JSON object on standard error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicContext, normalize_tangent
from .construction import (TRIPLE_BUDGET, build_triple_family,
                           containment_radius, expected_triple_count,
                           parameter_for_size)
from .counting import (BRUTE_LIMIT, FAST_LIMIT, count_brute, count_fast,
                       sweep, sweep_csv)
from .directions import count_distinct_directions
from .errors import InputError, InvariantViolation
from .grids import GRID_LIMIT, gen_grid
from .planar import PlanePoint, angle_at
from .serialize import (SCHEMA, context_from_obj, context_to_obj, dump_json,
                        parse_points_doc, points_csv, points_doc, read_json,
                        triples_doc, write_json)

PRESETS = {
    "pi4": ((-1, 1), 1, (Fraction(1, 2), Fraction(3, 2))),
    "sqrt2": ((-2, 0, 1), 1, (Fraction(5, 4), Fraction(3, 2))),
    "pi6": ((-3, 0, 1), 3, (Fraction(3, 2), Fraction(2))),
}


def preset_context(name: str) -> AlgebraicContext:
    """Context for a named built-in preset."""
    minpoly, b, iso = PRESETS[name]
    return AlgebraicContext(minpoly, b, iso)


class _Parser(argparse.ArgumentParser):
    # argparse exits with its own codes on bad flags; route through the
    # package's error taxonomy instead so exit 1 always means input error.
    def error(self, message):
        raise InputError(message)


@dataclass
class RunConfig:
    """Validated run-wide settings shared by every subcommand."""

    subcommand: str
    context_source: tuple | None
    brute_limit: int
    triple_budget: int
    grid_limit: int
    fast_limit: int
    threads: int
    out: str | None
    verbose: int

    @classmethod
    def from_args(cls, args) -> RunConfig:
        cfg = cls(
            subcommand=args.command,
            context_source=_context_source_from_args(args),
            brute_limit=getattr(args, "brute_limit", BRUTE_LIMIT),
            triple_budget=getattr(args, "triple_budget", TRIPLE_BUDGET),
            grid_limit=getattr(args, "grid_limit", GRID_LIMIT),
            fast_limit=getattr(args, "fast_limit", FAST_LIMIT),
            threads=getattr(args, "threads", 1),
            out=getattr(args, "out", None),
            verbose=getattr(args, "verbose", 0),
        )
        for name in ("brute_limit", "triple_budget", "grid_limit",
                     "fast_limit", "threads"):
            if getattr(cfg, name) < 1:
                raise InputError(f"--{name.replace('_', '-')} must be >= 1")
        return cfg

    def info(self, message: str):
        if self.verbose:
            sys.stderr.write(message + "\n")


# -- flag parsing helpers --------------------------------------------------

def _parse_ints(text: str, what: str):
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers") from None


def _parse_interval(text: str, what: str):
    toks = [tok for tok in text.replace(" ", "").split(",") if tok]
    if len(toks) != 2:
        raise InputError(f"{what}: expected 'lo,hi'")
    try:
        return Fraction(toks[0]), Fraction(toks[1])
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{what}: endpoints must be rationals like 3/2") from None


def _parse_point(ctx: AlgebraicContext, text: str, what: str) -> PlanePoint:
    parts = text.split(";")
    if len(parts) != 2:
        raise InputError(f"{what}: expected 're;im' coordinate lists")
    re = _parse_ints(parts[0], what)
    im = _parse_ints(parts[1], what)
    if len(re) != ctx.degree or len(im) != ctx.degree:
        raise InputError(f"{what}: expected {ctx.degree} coordinates per part")
    return PlanePoint.from_coeffs(ctx, re, im)


def _context_source_from_args(args) -> tuple | None:
    sources = []
    preset = getattr(args, "preset", None) or getattr(args, "d1_theta", None)
    if preset:
        sources.append(("preset", preset))
    inline = [getattr(args, name, None) for name in ("minpoly", "b", "iso")]
    if any(v is not None for v in inline):
        if any(v is None for v in inline):
            raise InputError("--minpoly, --b and --iso must be given together")
        sources.append(("inline", tuple(inline)))
    path = getattr(args, "context", None)
    if path:
        sources.append(("file", path))
    if len(sources) > 1:
        raise InputError("give exactly one context source "
                         "(--preset / --minpoly group / --context)")
    return sources[0] if sources else None


def _resolve_context(cfg: RunConfig, args,
                     embedded: AlgebraicContext | None = None) -> AlgebraicContext:
    source = cfg.context_source
    if getattr(args, "theta_from_context", False) and source is not None:
        raise InputError(
            "--theta-from-context conflicts with an explicit context source"
        )
    if source is None:
        if embedded is not None:
            return embedded
        raise InputError("no context given: use --preset, "
                         "--minpoly/--b/--iso, or --context FILE")
    kind, value = source
    if kind == "preset":
        return preset_context(value)
    if kind == "inline":
        minpoly_text, b, iso_text = value
        minpoly = _parse_ints(minpoly_text, "--minpoly")
        iso = _parse_interval(iso_text, "--iso")
        return AlgebraicContext(minpoly, b, iso)
    doc = read_json(value)
    if not isinstance(doc, dict):
        raise InputError(f"{value}: expected a JSON object")
    if "context" in doc:
        return context_from_obj(doc["context"])
    return context_from_obj({k: doc.get(k) for k in ("minpoly", "b", "iso")})


def _emit(text: str, out: str | None):
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}") from None
    else:
        sys.stdout.write(text)


# -- subcommands -----------------------------------------------------------

def _cmd_normalize(cfg: RunConfig, args):
    coeffs = _parse_ints(args.tanpoly, "--tanpoly")
    interval = _parse_interval(args.interval, "--interval")
    q, b, iso = normalize_tangent(coeffs, interval)
    ctx = AlgebraicContext(q, b, iso)
    doc = {"schema": SCHEMA, **context_to_obj(ctx)}
    _emit(dump_json(doc), cfg.out)


def _cmd_construct(cfg: RunConfig, args):
    ctx = _resolve_context(cfg, args)
    if args.n is not None:
        try:
            t = parameter_for_size(ctx, args.n)
        except InputError:
            warnings.warn(
                f"n = {args.n} is at or below the size factor "
                f"{ctx.size_factor}; falling back to t = 1"
            )
            t = 1
    else:
        t = args.t
    expected = expected_triple_count(ctx, t)
    cfg.info(f"t = {t}, expected triples = {expected}")
    if args.dry_run:
        doc = {
            "schema": SCHEMA,
            "t": str(t),
            "expected_triples": str(expected),
            "containment_radius": str(containment_radius(ctx, t)),
        }
        sys.stdout.write(dump_json(doc))
        return
    fam = build_triple_family(ctx, t, budget=cfg.triple_budget,
                              grid_limit=cfg.grid_limit)
    index = {p.key(): i for i, p in enumerate(fam.points)}
    idx_triples = [
        (index[a.key()], index[b.key()], index[c.key()])
        for a, b, c in fam.triples
    ]
    if args.out:
        write_json(args.out, points_doc(ctx, fam.points))
    if args.triples_out:
        write_json(args.triples_out, triples_doc(ctx, fam.points, idx_triples))
    if args.csv_out:
        _emit(points_csv(ctx, fam.points), args.csv_out)
    summary = {
        "schema": SCHEMA,
        "t": str(t),
        "triples": str(len(fam.triples)),
        "points": str(len(fam.points)),
    }
    sys.stdout.write(dump_json(summary))


def _cmd_count(cfg: RunConfig, args):
    doc = read_json(args.input)
    explicit = None
    if cfg.context_source is not None:
        explicit = _resolve_context(cfg, args)
    ctx, points = parse_points_doc(doc, ctx=explicit)
    reports = {}
    if args.method in ("brute", "both"):
        reports["brute"] = count_brute(points, ctx, limit=cfg.brute_limit,
                                       per_apex=args.per_apex,
                                       threads=cfg.threads)
    if args.method in ("fast", "both"):
        reports["fast"] = count_fast(points, ctx, per_apex=args.per_apex,
                                     threads=cfg.threads)
    if args.method == "both":
        if reports["brute"].total != reports["fast"].total:
            raise InvariantViolation(
                f"counter disagreement: brute {reports['brute'].total} "
                f"vs fast {reports['fast'].total}"
            )
    primary = reports.get("fast") or reports["brute"]
    for rep in reports.values():
        cfg.info(f"{rep.method}: {rep.total} in {rep.elapsed:.3f}s")
    out = {
        "schema": SCHEMA,
        "method": args.method,
        "n": str(len(points)),
        "total": str(primary.total),
    }
    if args.method == "both":
        out["brute_total"] = str(reports["brute"].total)
        out["fast_total"] = str(reports["fast"].total)
    if args.per_apex:
        out["per_apex"] = [str(c) for c in primary.per_apex]
    _emit(dump_json(out), cfg.out)


def _cmd_verify_ungar(cfg: RunConfig, args):
    ctx = _resolve_context(cfg, args)
    ts = [args.t] if args.t is not None else list(range(1, args.t_max + 1))
    lines = ["t,n,distinct_directions,bound,status"]
    for t in ts:
        points = gen_grid(ctx, t, cfg.grid_limit)
        n = len(points)
        distinct = count_distinct_directions(points)
        bound = n - 1
        status = "pass" if distinct >= bound else "fail"
        lines.append(f"{t},{n},{distinct},{bound},{status}")
    _emit("\n".join(lines) + "\n", cfg.out)


def _cmd_sweep(cfg: RunConfig, args):
    ctx = _resolve_context(cfg, args)
    rows = sweep(ctx, range(1, args.t_max + 1), point_set=args.point_set,
                 fast_limit=cfg.fast_limit, triple_budget=cfg.triple_budget,
                 grid_limit=cfg.grid_limit, threads=cfg.threads)
    _emit(sweep_csv(rows), cfg.out)


def _cmd_angle_check(cfg: RunConfig, args):
    ctx = _resolve_context(cfg, args)
    apex = _parse_point(ctx, args.apex, "--apex")
    q = _parse_point(ctx, args.q, "--q")
    r = _parse_point(ctx, args.r, "--r")
    doc = {"schema": SCHEMA, "match": angle_at(apex, q, r).value}
    _emit(dump_json(doc), cfg.out)


_HANDLERS = {
    "normalize": _cmd_normalize,
    "construct": _cmd_construct,
    "count": _cmd_count,
    "verify-ungar": _cmd_verify_ungar,
    "sweep": _cmd_sweep,
    "angle-check": _cmd_angle_check,
}


# -- parser assembly -------------------------------------------------------

def _context_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("context source")
    g.add_argument("--preset", choices=sorted(PRESETS),
                   help="built-in angle: pi4 (tan=1), pi6 (tan=sqrt(3)/3), "
                        "sqrt2 (tan=sqrt(2))")
    g.add_argument("--d1-theta", choices=["pi4"], dest="d1_theta",
                   help="shorthand for --preset pi4")
    g.add_argument("--minpoly", metavar="C0,C1,...,1",
                   help="monic minimal polynomial of alpha, constant term first")
    g.add_argument("--b", type=int, help="integer b with tan(theta) = alpha/b")
    g.add_argument("--iso", metavar="LO,HI",
                   help="positive rational interval isolating alpha")
    g.add_argument("--context", metavar="FILE",
                   help="context JSON file (as written by normalize)")
    return p


def _budget_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("budgets")
    g.add_argument("--brute-limit", type=int, default=BRUTE_LIMIT,
                   help=f"max points for the brute counter (default {BRUTE_LIMIT})")
    g.add_argument("--triple-budget", type=int, default=TRIPLE_BUDGET,
                   help=f"max triples to materialize (default {TRIPLE_BUDGET})")
    g.add_argument("--grid-limit", type=int, default=GRID_LIMIT,
                   help=f"max grid cardinality (default {GRID_LIMIT})")
    g.add_argument("--fast-limit", type=int, default=FAST_LIMIT,
                   help=f"max points per sweep step (default {FAST_LIMIT})")
    g.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads for counting (results are identical "
                        "for any value)")
    p.add_argument("-v", "--verbose", action="count", default=0,
                   help="progress notes on standard error")
    return p


def build_parser() -> _Parser:
    parser = _Parser(
        prog="angleforge",
        description="Exact construction and counting of point-set triples "
                    "determining a fixed angle with algebraic tangent.",
    )
    ctx_p = _context_parent()
    bud_p = _budget_parent()
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("normalize", parents=[bud_p],
                       help="turn an integer polynomial with root tan(theta) "
                            "into a context (monic minpoly, b, interval)")
    p.add_argument("--tanpoly", required=True, metavar="P0,P1,...",
                   help="integer polynomial with root tan(theta), "
                        "constant term first")
    p.add_argument("--interval", required=True, metavar="LO,HI",
                   help="rational interval isolating the tan(theta) root")
    p.add_argument("--out", metavar="FILE", help="write JSON here (default stdout)")

    p = sub.add_parser("construct", parents=[ctx_p, bud_p],
                       help="build the triple family for a parameter t")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=int, help="construction parameter t >= 1")
    g.add_argument("--n", type=int,
                   help="derive t from a target point count n")
    p.add_argument("--dry-run", action="store_true",
                   help="report the expected triple count without building")
    p.add_argument("--out", metavar="FILE", help="write the point set JSON here")
    p.add_argument("--triples-out", metavar="FILE",
                   help="write points plus index triples JSON here")
    p.add_argument("--csv-out", metavar="FILE",
                   help="write a decimal x,y rendering of the points here")

    p = sub.add_parser("count", parents=[ctx_p, bud_p],
                       help="count theta-triples in a point file")
    p.add_argument("--input", required=True, metavar="FILE",
                   help="points JSON (as written by construct --out)")
    p.add_argument("--theta-from-context", action="store_true",
                   help="insist on the context embedded in the input file")
    p.add_argument("--method", choices=["brute", "fast", "both"],
                   default="fast")
    p.add_argument("--per-apex", action="store_true",
                   help="include per-apex counts in the report")
    p.add_argument("--out", metavar="FILE", help="write JSON here (default stdout)")

    p = sub.add_parser("verify-ungar", parents=[ctx_p, bud_p],
                       help="census distinct directions of a grid against "
                            "the N-1 lower bound")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=int, help="single grid radius t")
    g.add_argument("--t-max", type=int, help="all radii 1..t-max")
    p.add_argument("--out", metavar="FILE", help="write CSV here (default stdout)")

    p = sub.add_parser("sweep", parents=[ctx_p, bud_p],
                       help="counts vs n^2 ln n over t = 1..t-max")
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--point-set", choices=["grid", "union"], default="grid",
                   help="count on the containment grid or on the "
                        "construction's union point set")
    p.add_argument("--out", metavar="FILE", help="write CSV here (default stdout)")

    p = sub.add_parser("angle-check", parents=[ctx_p, bud_p],
                       help="evaluate the exact angle predicate on three points")
    p.add_argument("--apex", required=True, metavar="RE;IM",
                   help="apex point, coordinates as 'a0,..;b0,..'")
    p.add_argument("--q", required=True, metavar="RE;IM")
    p.add_argument("--r", required=True, metavar="RE;IM")
    p.add_argument("--out", metavar="FILE", help="write JSON here (default stdout)")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig.from_args(args)
        _HANDLERS[args.command](cfg, args)
        return 0
    except InputError as exc:
        _report_error("input", exc)
        return 1
    except InvariantViolation as exc:
        _report_error("invariant", exc)
        return 2


def _report_error(kind: str, exc: Exception):
    doc = {"error": {"kind": kind, "message": str(exc)}}
    sys.stderr.write(json.dumps(doc) + "\n")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
