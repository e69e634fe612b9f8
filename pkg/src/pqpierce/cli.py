"""Command-line surface and file formats.

Subcommands: bounds, analyze, pierce, generate, experiment.  Families are
exchanged as JSON documents with rationals serialized as exact
"numerator/denominator" strings; experiment matrices are CSV.  Exit
codes: 0 success, 1 theorem-claim violation (experiment), 2 input error,
3 premise violation, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import bounds as boundsmod
from . import family as familymod
from . import generators as genmod
from . import piercing as piercingmod
from .errors import (
    ArityError,
    BudgetExceededError,
    DimensionMismatchError,
    ParseError,
    PremiseViolationError,
)
from .family import Family
from .geometry import ConvexPolygon, Interval, Line, Point

FORMAT_VERSION = "1"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_PREMISE = 3
EXIT_BUDGET = 4

CSV_COLUMNS = [
    "seed",
    "n",
    "p",
    "q",
    "r_threshold",
    "max_r",
    "pierce_bound_claimed",
    "pierce_actual",
    "theorem_tag",
    "status",
]


# ---------------------------------------------------------------------------
# FamilyDocument serialization
# ---------------------------------------------------------------------------

def _rat_str(value) -> str:
    return str(Fraction(value))


def _parse_rational(text, where: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r} in {where}: {exc}") from None


def family_to_document(F: Family, metadata: dict | None = None) -> dict:
    bodies = []
    for body in F.bodies:
        if F.dimension == 1:
            bodies.append({"type": "interval", "lo": _rat_str(body.lo), "hi": _rat_str(body.hi)})
        else:
            bodies.append(
                {
                    "type": "polygon",
                    "vertices": [[_rat_str(v.x), _rat_str(v.y)] for v in body.vertices],
                }
            )
    return {
        "format_version": FORMAT_VERSION,
        "dimension": F.dimension,
        "bodies": bodies,
        "metadata": {str(k): str(v) for k, v in (metadata or {}).items()},
    }


def document_to_family(doc: dict) -> Family:
    if not isinstance(doc, dict):
        raise ParseError("family document must be a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    if str(version) != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    dimension = doc.get("dimension")
    if dimension not in (1, 2):
        raise ParseError(f"dimension must be 1 or 2, got {dimension!r}")
    raw_bodies = doc.get("bodies")
    if not isinstance(raw_bodies, list) or not raw_bodies:
        raise ParseError("bodies must be a nonempty list")
    bodies = []
    for idx, raw in enumerate(raw_bodies):
        where = f"body {idx}"
        if not isinstance(raw, dict) or "type" not in raw:
            raise ParseError(f"{where}: not an object with a type")
        kind = raw["type"]
        try:
            if kind == "interval":
                body = Interval(
                    _parse_rational(raw.get("lo"), where), _parse_rational(raw.get("hi"), where)
                )
            elif kind == "polygon":
                verts = raw.get("vertices")
                if not isinstance(verts, list) or not verts:
                    raise ParseError(f"{where}: vertices must be a nonempty list")
                pts = [
                    Point(_parse_rational(x, where), _parse_rational(y, where))
                    for x, y in verts
                ]
                body = ConvexPolygon.from_points(pts)
            else:
                raise ParseError(f"{where}: unknown body type {kind!r}")
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
        bodies.append(body)
    try:
        return Family(dimension, tuple(bodies))
    except (ValueError, DimensionMismatchError) as exc:
        raise ParseError(str(exc)) from None


def dump_family(F: Family, metadata: dict | None = None) -> str:
    return json.dumps(family_to_document(F, metadata), sort_keys=True, indent=2) + "\n"


def load_family(path: str) -> Family:
    try:
        with open(path) as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None
    return document_to_family(doc)


def _serialize_point(p) -> object:
    if isinstance(p, Point):
        return [_rat_str(p.x), _rat_str(p.y)]
    return _rat_str(p)


def _piercing_json(ps: piercingmod.PiercingSet, strategy: str) -> dict:
    return {
        "points": [_serialize_point(p) for p in ps.points],
        "size": len(ps),
        "certified": ps.certified,
        "strategy": strategy,
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _emit(payload: dict, out) -> None:
    out.write(json.dumps(payload, sort_keys=True) + "\n")


def _bound_json(result) -> dict:
    return {
        "threshold_r": str(result.threshold_r),
        "pierce_bound": result.pierce_bound,
        "caveats": list(result.caveats),
    }


def cmd_bounds(args, out) -> int:
    p, q, d = args.p, args.q, args.d
    theorem = args.theorem
    if theorem == "thm1":
        payload = _bound_json(boundsmod.ms_threshold(p, q, d))
    elif theorem == "thm2":
        if args.epsilon is None:
            raise ArityError("thm2 requires --epsilon")
        payload = _bound_json(boundsmod.thm2_threshold(p, q, d, Fraction(args.epsilon)))
    elif theorem == "thm3":
        if args.k is None:
            raise ArityError("thm3 requires --k")
        payload = _bound_json(boundsmod.thm3_threshold(p, q, d, args.k))
    elif theorem == "prop-dim1":
        if args.k is None:
            raise ArityError("prop-dim1 requires --k")
        payload = _bound_json(boundsmod.dim1_threshold(p, q, args.k))
    elif theorem == "lemma-r0":
        if args.f is None:
            raise ArityError("lemma-r0 requires --f")
        payload = _bound_json(boundsmod.lemma_r0_threshold(p, q, d, args.f))
    elif theorem == "remark":
        if args.f is None:
            raise ArityError("remark requires --f")
        eps = Fraction(args.epsilon) if args.epsilon is not None else None
        payload = _bound_json(boundsmod.remark_threshold(p, q, d, args.f, eps))
    elif theorem == "kalai":
        if args.s is None:
            raise ArityError("kalai requires --s")
        payload = {"value": str(boundsmod.kalai_bound(p, q, args.s, d))}
    elif theorem == "hd-region":
        value = boundsmod.hd_exact_region(p, q, d)
        payload = {"piercing_number": value}
    elif theorem == "implied-q":
        if args.r is None:
            raise ArityError("implied-q requires --r")
        payload = {"q_prime": boundsmod.implied_q(p, q, args.r, d)}
    else:  # unreachable thanks to argparse choices
        raise ArityError(f"unknown theorem id {theorem!r}")
    _emit(payload, out)
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    F = load_family(args.family)
    report = familymod.max_r(F, args.p, args.q)
    level, _ = familymod.degeneracy_level(F)
    payload = {
        "p": args.p,
        "q": args.q,
        "max_r": str(report.max_r),
        "witness_subset": list(report.witness_subset),
        "f_q_minus_1": str(familymod.count_intersecting_qtuples(F, args.q)),
        "degeneracy_level": level,
        "n": len(F),
    }
    _emit(payload, out)
    return EXIT_OK


def _parse_line(text: str) -> Line:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"--line expects 'a,b,c', got {text!r}")
    a, b, c = (_parse_rational(part.strip(), "--line") for part in parts)
    try:
        return Line(a, b, c)
    except ValueError as exc:
        raise ParseError(f"--line: {exc}") from None


def cmd_pierce(args, out) -> int:
    F = load_family(args.family)
    if args.strategy == "exact":
        result = piercingmod.min_piercing(F)
    elif args.strategy == "hd":
        if args.p is None or args.q is None:
            raise ArityError("strategy hd requires --p and --q")
        result = piercingmod.hd_pierce(F, args.p, args.q)
    else:  # line
        if args.p is None or args.k is None or args.line is None:
            raise ArityError("strategy line requires --p, --k and --line")
        result = piercingmod.line_pierce(F, _parse_line(args.line), args.p, args.k)
    if not piercingmod._certify(F, result.points):
        raise AssertionError("certification failed after solve")
    _emit(_piercing_json(result, args.strategy), out)
    return EXIT_OK


def _spec_from_args(args) -> genmod.GeneratorSpec:
    if args.spec_json is not None:
        try:
            raw = json.loads(args.spec_json)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid spec JSON: {exc}") from None
        if not isinstance(raw, dict) or "kind" not in raw:
            raise ParseError("spec JSON must be an object with a 'kind'")
        allowed = set(genmod.GeneratorSpec.__dataclass_fields__)
        unknown = set(raw) - allowed
        if unknown:
            raise ParseError(f"unknown spec fields: {sorted(unknown)}")
        try:
            return genmod.GeneratorSpec(**raw)
        except TypeError as exc:
            raise ParseError(str(exc)) from None
    if args.kind is None:
        raise ArityError("generate requires a kind or --spec-json")
    fields = {}
    for name in ("p", "k", "a", "b", "dimension", "n", "seed", "span", "extent", "grid"):
        value = getattr(args, name, None)
        if value is not None:
            fields[name] = value
    return genmod.GeneratorSpec(kind=args.kind.replace("-", "_"), **fields)


def cmd_generate(args, out) -> int:
    spec = _spec_from_args(args)
    F = genmod.random_family(spec)
    meta = {"kind": spec.kind, "seed": spec.seed}
    for name in ("p", "k", "a", "b", "dimension", "n", "span", "extent", "grid"):
        value = getattr(spec, name)
        if value is not None:
            meta[name] = value
    out.write(dump_family(F, metadata=meta))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------

def _experiment_rows(config: dict):
    """Yield (row dict, family, violation message or None) triples."""
    tag = config.get("theorem")
    seeds = config.get("seeds", 20)
    if isinstance(seeds, int):
        seeds = list(range(seeds))
    if tag == "thm5":
        dimension = config.get("dimension", 1)
        n = config.get("n", 8)
        grid = config.get("grid", {})
        ps = grid.get("p", [3, 4, 5, 6])
        kind = "random_intervals" if dimension == 1 else "random_polygons"
        for p in ps:
            qs = grid.get("q") or [
                q
                for q in range(2, p + 1)
                if dimension * q > (dimension - 1) * p + dimension
            ]
            for q in qs:
                claimed = p - q + 1
                for seed in seeds:
                    spec = genmod.GeneratorSpec(kind, n=max(n, p), seed=seed)
                    F = genmod.random_family(spec)
                    row = {
                        "seed": seed,
                        "n": len(F),
                        "p": p,
                        "q": q,
                        "r_threshold": 1,
                        "theorem_tag": tag,
                        "pierce_bound_claimed": claimed,
                    }
                    yield _finish_row(row, F, premise=lambda F=F, p=p, q=q: familymod.satisfies_pqr(F, p, q, 1))
    elif tag == "prop-dim1":
        grid = config.get("grid", {})
        ps = grid.get("p", [4, 5, 6, 7, 8, 9])
        for p in ps:
            for q in grid.get("q") or range(2, p + 1):
                ks = grid.get("k") or range(0, p - q)
                for k in ks:
                    F = genmod.extremal_dim1(p, k)
                    threshold = boundsmod.dim1_threshold(p, q, k).threshold_r
                    row = {
                        "seed": 0,
                        "n": len(F),
                        "p": p,
                        "q": q,
                        "r_threshold": threshold,
                        "theorem_tag": tag,
                        "pierce_bound_claimed": k + 2,
                    }
                    yield _finish_row(row, F, premise=lambda: True)
    elif tag == "kalai":
        dimension = config.get("dimension", 1)
        n = config.get("n", 8)
        kind = "random_intervals" if dimension == 1 else "random_polygons"
        for seed in seeds:
            F = genmod.random_family(genmod.GeneratorSpec(kind, n=n, seed=seed))
            fvec = familymod.f_vector(F)
            for s in range(0, len(F) - dimension):
                if fvec[dimension + s] != 0:
                    continue
                for q in range(1, len(F) + 1):
                    bound = boundsmod.kalai_bound(len(F), q, s, dimension)
                    observed = fvec[q - 1]
                    row = {
                        "seed": seed,
                        "n": len(F),
                        "p": len(F),
                        "q": q,
                        "r_threshold": bound,
                        "max_r": observed,
                        "theorem_tag": tag,
                        "pierce_bound_claimed": len(F),
                        "pierce_actual": "",
                        "status": "ok",
                    }
                    violation = (
                        f"f_(q-1)={observed} exceeds bound {bound} (seed {seed}, q={q}, s={s})"
                        if observed > bound
                        else None
                    )
                    yield row, F, violation
                break  # smallest s dominates; one row set per seed and q
    else:
        raise ParseError(f"unknown experiment theorem {tag!r}")


def _finish_row(row: dict, F: Family, premise) -> tuple:
    try:
        report = familymod.max_r(F, row["p"], row["q"])
        row["max_r"] = report.max_r
        holds = premise() and report.max_r >= row["r_threshold"]
        actual = len(piercingmod.min_piercing(F))
        row["pierce_actual"] = actual
        row["status"] = "ok"
        violation = None
        if holds and actual > row["pierce_bound_claimed"]:
            violation = (
                f"pierced by {actual} > claimed {row['pierce_bound_claimed']} "
                f"(seed {row['seed']}, p={row['p']}, q={row['q']})"
            )
        return row, F, violation
    except BudgetExceededError:
        row.setdefault("max_r", "")
        row["pierce_actual"] = ""
        row["status"] = "budget_exceeded"
        return row, F, None


def cmd_experiment(args, out) -> int:
    try:
        with open(args.config) as handle:
            config = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {args.config}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {args.config}: {exc}") from None

    rows = []
    for row, F, violation in _experiment_rows(config):
        rows.append(row)
        if violation is not None:
            dump_path = (args.output or "experiment") + ".violation.json"
            with open(dump_path, "w") as handle:
                handle.write(dump_family(F, metadata={"violation": violation}))
            sys.stderr.write(f"violation: {violation}; family dumped to {dump_path}\n")
            return EXIT_VIOLATION
    rows.sort(key=lambda r: (str(r["theorem_tag"]), r["p"], r["q"], str(r["r_threshold"]), r["seed"]))

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow({col: row.get(col, "") for col in CSV_COLUMNS})
    out.write(buffer.getvalue())
    if args.output:
        with open(args.output + ".config.json", "w") as handle:
            json.dump(config, handle, sort_keys=True, indent=2)
            handle.write("\n")
    else:
        sys.stderr.write("config: " + json.dumps(config, sort_keys=True) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqpierce",
        description="Exact piercing thresholds, property checks, and solvers "
        "for families of convex sets in dimensions 1 and 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="evaluate a threshold or bound formula")
    b.add_argument(
        "theorem",
        choices=[
            "thm1",
            "thm2",
            "thm3",
            "prop-dim1",
            "lemma-r0",
            "remark",
            "kalai",
            "hd-region",
            "implied-q",
        ],
    )
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--d", type=int, default=1)
    b.add_argument("--k", type=int)
    b.add_argument("--f", type=int)
    b.add_argument("--s", type=int)
    b.add_argument("--r", type=int)
    b.add_argument("--epsilon", type=str, help="rational like 1/2")
    b.set_defaults(func=cmd_bounds)

    a = sub.add_parser("analyze", help="report max_r and degeneracy of a family file")
    a.add_argument("family")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--q", type=int, required=True)
    a.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pierce", help="compute a certified piercing set")
    p.add_argument("family")
    p.add_argument("--strategy", choices=["exact", "hd", "line"], default="exact")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--line", type=str, help="a,b,c for the line a*x+b*y=c")
    p.set_defaults(func=cmd_pierce)

    g = sub.add_parser("generate", help="emit a deterministic family document")
    g.add_argument(
        "kind",
        nargs="?",
        choices=["extremal-dim1", "disjoint-plus-container", "random-intervals", "random-polygons"],
    )
    g.add_argument("--spec-json", type=str, help="full GeneratorSpec as JSON")
    g.add_argument("--p", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--dimension", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--span", type=int)
    g.add_argument("--extent", type=int)
    g.add_argument("--grid", type=int)
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("experiment", help="run a validation grid and write CSV")
    e.add_argument("config", help="JSON config file")
    e.set_defaults(func=cmd_experiment)

    for command in (b, a, p, g, e):
        command.add_argument("--output", type=str, help="write to this file instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    try:
        if getattr(args, "output", None):
            with open(args.output, "w") as handle:
                return args.func(args, handle)
        return args.func(args, sys.stdout)
    except (ParseError, ArityError, DimensionMismatchError, ValueError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, sys.stdout)
        return EXIT_INPUT
    except PremiseViolationError as exc:
        payload = {"error": {"type": "PremiseViolationError", "message": str(exc)}}
        if exc.witness is not None:
            payload["error"]["witness"] = [list(w) if isinstance(w, tuple) else w for w in exc.witness]
        _emit(payload, sys.stdout)
        return EXIT_PREMISE
    except BudgetExceededError as exc:
        _emit({"error": {"type": "BudgetExceededError", "message": str(exc)}}, sys.stdout)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
