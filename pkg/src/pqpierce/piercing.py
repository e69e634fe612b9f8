"""Exact minimum piercing and the constructive piercing procedures.

Three solvers live here:

* :func:`min_piercing` — exact optimum via right-endpoint sweep in 1D and
  branch-and-bound set cover over candidate points in 2D.
* :func:`hd_pierce` — the recursive construction that pierces a family
  with the (p,q) property (in the regime d*q > (d-1)*p + d) using at most
  p-q+1 points: repeatedly pick the lexicographic minimum of the
  lexicographic maxima of intersecting d-tuples, keep that point, and
  recurse on the bodies it misses with parameters (p-d, q-d+1).
* :func:`line_pierce` — piercing through a line: bodies missing the line
  are pierced at their lexmax, the rest are reduced to 1D segments along
  the line and solved exactly.

:func:`ms_line` constructs, for any 2D family, a pair (A, B) and a line
that every body meeting both A and B must cross; the guarantee predicate
is re-verified against the family before the witness is returned.

Candidate points are sufficient for optimal piercing because any piercing
point x can be replaced by the lexicographic maximum of the intersection
of the bodies it pierces, and (by Helly in the plane) that maximum is
already the lexmax of a single body or of some pair intersection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import family as familymod
from .bounds import dim1_threshold
from .errors import ArityError, BudgetExceededError, DimensionMismatchError, PremiseViolationError
from .family import Family
from .geometry import (
    ConvexPolygon,
    Interval,
    Line,
    Point,
    _clip_halfplane,
    body_contains_point,
    dot,
    intersect_bodies,
    lexmax_body,
    line_meets_body,
    separating_line,
)

#: Node cap for the branch-and-bound cover search.
DEFAULT_NODE_BUDGET = 500_000


@dataclass(frozen=True)
class PiercingSet:
    """A list of piercing points (rationals in 1D, Points in 2D) with a
    validity certificate against the family it was computed for."""

    points: tuple
    certified: bool

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class LineLemmaWitness:
    """Pair indices (A, B) and a line such that every family member
    meeting both A and B meets the line; x0 is set in the branch where all
    pairs intersect."""

    A_index: int
    B_index: int
    line: Line
    x0: Optional[Point]


def _certify(F: Family, points: Sequence) -> bool:
    return all(
        any(body_contains_point(body, p) for p in points) for body in F.bodies
    )


def candidate_points(F: Family) -> list:
    """Lexmax of every body and of every intersecting pair, deduplicated
    and sorted; sufficient for exact minimum piercing."""
    seen = set()
    for body in F.bodies:
        seen.add(lexmax_body(body))
    for i, j in itertools.combinations(range(len(F)), 2):
        region = intersect_bodies([F.bodies[i], F.bodies[j]])
        if region is not None:
            seen.add(lexmax_body(region))
    return sorted(seen)


def exhaustive_candidate_points(F: Family) -> list:
    """Lexmax of the intersection of every intersecting subfamily; the
    unreduced candidate set used to validate the pair reduction."""
    n = len(F)
    seen = set()

    def extend(region, start):
        for i in range(start, n):
            sub = intersect_bodies([region, F.bodies[i]]) if region is not None else F.bodies[i]
            if sub is None:
                continue
            seen.add(lexmax_body(sub))
            extend(sub, i + 1)

    extend(None, 0)
    return sorted(seen)


def sweep_piercing_1d(F: Family) -> PiercingSet:
    """Exact minimum piercing of intervals: repeatedly stab the smallest
    right endpoint among surviving intervals."""
    if F.dimension != 1:
        raise DimensionMismatchError("sweep solver is 1D only")
    remaining = sorted(F.bodies, key=lambda b: (b.hi, b.lo))
    points: list[Fraction] = []
    while remaining:
        stab = remaining[0].hi
        points.append(stab)
        remaining = [b for b in remaining if not b.contains(stab)]
    assert _certify(F, points)
    return PiercingSet(points=tuple(sorted(points)), certified=True)


def _pairwise_disjoint_lower_bound(
    uncovered: list[int], disjoint: list[list[bool]]
) -> int:
    """Greedy pairwise-disjoint packing: each chosen body needs its own
    piercing point, so the packing size lower-bounds the cover size."""
    packed: list[int] = []
    for i in uncovered:
        if all(disjoint[i][j] for j in packed):
            packed.append(i)
    return len(packed)


def branch_and_bound_piercing(
    F: Family,
    candidates: Optional[list] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PiercingSet:
    """Exact minimum piercing via branch-and-bound set cover over a
    sufficient candidate-point set (works in 1D and 2D)."""
    n = len(F)
    if candidates is None:
        candidates = candidate_points(F)
    covers = []
    for point in candidates:
        mask = frozenset(
            i for i, body in enumerate(F.bodies) if body_contains_point(body, point)
        )
        if mask:
            covers.append((point, mask))
    # drop candidates whose coverage is dominated by an earlier one
    covers.sort(key=lambda pm: (-len(pm[1]), pm[0]))
    kept: list[tuple] = []
    for point, mask in covers:
        if not any(mask <= other for _, other in kept):
            kept.append((point, mask))
    covers = kept
    if not all(any(i in mask for _, mask in covers) for i in range(n)):
        raise AssertionError("candidate points fail to cover some body")

    disjoint = [
        [intersect_bodies([F.bodies[i], F.bodies[j]]) is None for j in range(n)]
        for i in range(n)
    ]
    point_choices: dict[int, list[int]] = {
        i: [ci for ci, (_, mask) in enumerate(covers) if i in mask] for i in range(n)
    }

    # greedy cover for an initial upper bound
    greedy: list[int] = []
    uncovered = set(range(n))
    while uncovered:
        ci = max(
            range(len(covers)),
            key=lambda ci: (len(covers[ci][1] & uncovered), -ci),
        )
        greedy.append(ci)
        uncovered -= covers[ci][1]
    best: list[int] = greedy
    nodes = 0

    def search(chosen: list[int], uncovered: frozenset[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(
                f"piercing search exceeded {node_budget} nodes on {n} bodies"
            )
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        lb = _pairwise_disjoint_lower_bound(sorted(uncovered), disjoint)
        if len(chosen) + max(lb, 1) >= len(best):
            return
        pivot = min(uncovered, key=lambda i: (len(point_choices[i]), i))
        for ci in point_choices[pivot]:
            search(chosen + [ci], uncovered - covers[ci][1])

    search([], frozenset(range(n)))
    points = tuple(sorted(covers[ci][0] for ci in best))
    assert _certify(F, points)
    return PiercingSet(points=points, certified=True)


def min_piercing(F: Family, node_budget: int = DEFAULT_NODE_BUDGET) -> PiercingSet:
    """An exact minimum-cardinality piercing set for the family."""
    if F.dimension == 1:
        return sweep_piercing_1d(F)
    return branch_and_bound_piercing(F, node_budget=node_budget)


def _intersecting_dtuples(F: Family, indices: Sequence[int]):
    """(lexmax of intersection, index tuple) for every intersecting
    d-tuple of the given members, d = family dimension."""
    d = F.dimension
    out = []
    for tup in itertools.combinations(indices, d):
        region = intersect_bodies([F.bodies[i] for i in tup])
        if region is not None:
            out.append((lexmax_body(region), tup, region))
    return out


def hd_pierce(F: Family, p: int, q: int) -> PiercingSet:
    """Constructive piercing with at most p-q+1 points for a family with
    the (p,q) property in the regime d*q > (d-1)*p + d.

    Each round keeps x0, the lexicographic minimum over intersecting
    d-tuples of the lexmax of their intersection (ties broken by smallest
    index tuple), and recurses on the bodies missing x0 with parameters
    (p-d, q-d+1); when fewer than p-d bodies survive they are finished off
    by the exact solver within a p-q point budget, and when the parameters
    meet (p' = q') all survivors share a point by Helly.
    """
    d = F.dimension
    if d == 1:
        if not p >= q >= 2:
            raise ArityError(f"need p >= q >= 2 in dimension 1, got p={p}, q={q}")
    elif not p >= q >= d + 1:
        raise ArityError(f"need p >= q >= d+1, got p={p}, q={q}")
    if len(F) < p:
        raise ArityError(f"family of size {len(F)} smaller than p={p}")
    if not d * q > (d - 1) * p + d:
        raise ArityError(
            f"need d*q > (d-1)*p + d for the construction, got p={p}, q={q}, d={d}"
        )

    points: list = []
    active = list(range(len(F)))
    cp, cq = p, q
    while True:
        sub = Family(F.dimension, tuple(F.bodies[i] for i in active))
        report = familymod.max_r(sub, cp, cq)
        if report.max_r < 1:
            witness = tuple(active[i] for i in report.witness_subset)
            raise PremiseViolationError(
                f"({cp},{cq}) property fails on subset {witness}",
                witness=witness,
            )
        if cp == cq:
            # every cq-subset intersects, hence every (d+1)-subset does;
            # Helly gives a common point
            region = intersect_bodies([F.bodies[i] for i in active])
            if region is None:
                raise AssertionError("Helly base case found empty intersection")
            points.append(lexmax_body(region))
            break
        tuples = _intersecting_dtuples(F, active)
        if not tuples:
            raise PremiseViolationError(
                f"no intersecting {d}-tuple among {tuple(active)}",
                witness=tuple(active),
            )
        x0, a_tuple, a_region = min(tuples, key=lambda t: (t[0], t[1]))
        points.append(x0)
        survivors = [i for i in active if not body_contains_point(F.bodies[i], x0)]
        for i in survivors:
            if intersect_bodies([F.bodies[i], a_region]) is not None:
                raise AssertionError(
                    "body missing x0 still meets the minimizing tuple's intersection"
                )
        if not survivors:
            break
        if len(survivors) >= cp - d:
            active = survivors
            cp, cq = cp - d, cq - d + 1
        else:
            rest = Family(F.dimension, tuple(F.bodies[i] for i in survivors))
            solved = min_piercing(rest)
            if len(solved) > cp - cq:
                raise AssertionError(
                    f"small-remainder branch needed {len(solved)} > {cp - cq} points"
                )
            points.extend(solved.points)
            break

    assert len(points) <= p - q + 1
    if not _certify(F, points):
        raise AssertionError("constructed piercing set failed certification")
    return PiercingSet(points=tuple(sorted(points)), certified=True)


def _effective_witness_polygon(body: ConvexPolygon, x0: Point) -> ConvexPolygon:
    """Closure of the part of the body at or lexicographically beyond x0:
    clip to x >= x0.x, and when that leaves only the vertical boundary
    line, refine to y >= x0.y on it."""
    if not body.contains(x0):
        raise AssertionError("x0 not in body while building witness polygon")
    clipped = _clip_to_halfplane(body, Fraction(-1), Fraction(0), -x0.x)
    if all(v.x == x0.x for v in clipped.vertices):
        clipped = _clip_to_halfplane(clipped, Fraction(0), Fraction(-1), -x0.y)
    return clipped


def _clip_to_halfplane(body: ConvexPolygon, a, b, c) -> ConvexPolygon:
    verts = _clip_halfplane(body.vertices, Fraction(a), Fraction(b), Fraction(c))
    if verts is None:
        raise AssertionError("clip emptied a polygon that must stay nonempty")
    return ConvexPolygon(verts)


def _line_guarantee_holds(F: Family, ai: int, bi: int, line: Line) -> bool:
    A, B = F.bodies[ai], F.bodies[bi]
    for C in F.bodies:
        if intersect_bodies([A, C]) is None or intersect_bodies([B, C]) is None:
            continue
        if not line_meets_body(line, C):
            return False
    return True


def ms_line(F: Family) -> LineLemmaWitness:
    """A pair (A, B) and a line met by every body that meets both.

    Branch (i): some pair is disjoint; any separating line works.
    Branch (ii): all pairs intersect; take x0 as the lexmin over pairs of
    lexmax of the pair intersection, and search for a line through x0
    weakly separating the beyond-x0 parts of the minimizing pair.  The
    guarantee predicate is verified against the family before returning.
    """
    if F.dimension != 2:
        raise DimensionMismatchError("the line lemma construction is 2D only")
    if len(F) < 2:
        raise ArityError("need at least two bodies")

    pair_regions = []
    for i, j in itertools.combinations(range(len(F)), 2):
        region = intersect_bodies([F.bodies[i], F.bodies[j]])
        if region is None:
            line = separating_line(F.bodies[i], F.bodies[j])
            witness = LineLemmaWitness(A_index=i, B_index=j, line=line, x0=None)
            if not _line_guarantee_holds(F, i, j, line):
                raise AssertionError("separating line failed the guarantee predicate")
            return witness
        pair_regions.append((lexmax_body(region), (i, j)))

    x0, (ai, bi) = min(pair_regions, key=lambda t: (t[0], t[1]))
    wa = _effective_witness_polygon(F.bodies[ai], x0)
    wb = _effective_witness_polygon(F.bodies[bi], x0)

    directions = {Point(Fraction(0), Fraction(1))}
    for poly in (wa, wb):
        verts = poly.vertices
        for k in range(len(verts)):
            u, w = verts[k], verts[(k + 1) % len(verts)]
            if u != w:
                directions.add(w - u)
        for v in verts:
            if v != x0:
                directions.add(v - x0)

    def candidate_lines():
        for dvec in sorted(directions):
            yield Line.from_point_direction(x0, dvec)
        for body in F.bodies:  # fallback sweep
            for v in sorted(body.vertices):
                if v != x0:
                    yield Line.through(x0, v)
        yield Line.from_point_direction(x0, Point(Fraction(1), Fraction(0)))

    tried = set()
    for line in candidate_lines():
        if line in tried:
            continue
        tried.add(line)
        sa = [line.side(v) for v in wa.vertices]
        sb = [line.side(v) for v in wb.vertices]
        separates = (min(sa) >= 0 and max(sb) <= 0) or (max(sa) <= 0 and min(sb) >= 0)
        if separates and _line_guarantee_holds(F, ai, bi, line):
            return LineLemmaWitness(A_index=ai, B_index=bi, line=line, x0=x0)
    raise AssertionError("no witness line found; construction bug")


def line_pierce(F: Family, line: Line, p: int, k: int) -> PiercingSet:
    """Pierce with at most k+1 points a family satisfying the (p,2)
    property through the line at the tight 1D threshold r0.

    Bodies missing the line are pierced at their lexmax; the rest are
    reduced to segments along the line and solved by the exact 1D sweep.
    """
    if F.dimension != 2:
        raise DimensionMismatchError("line piercing is 2D only")
    if k < 0 or p < 2:
        raise ArityError(f"need p >= 2 and k >= 0, got p={p}, k={k}")
    if k > p - 2:
        raise ArityError(f"need k <= p-2, got k={k}, p={p}")
    r0 = dim1_threshold(p, 2, k).threshold_r
    if not familymod.satisfies_pqr_through_line(F, line, p, 2, r0):
        raise PremiseViolationError(
            f"family does not satisfy the (p,2)_{r0} property through the line"
        )
    missing = {i for i in range(len(F)) if not line_meets_body(line, F.bodies[i])}
    if len(missing) > k:
        raise PremiseViolationError(
            f"{len(missing)} bodies miss the line, more than k={k}",
            witness=tuple(sorted(missing)),
        )
    points: list[Point] = [lexmax_body(F.bodies[i]) for i in sorted(missing)]

    base = line.some_point()
    direction = line.direction()
    scale = dot(direction, direction)
    segments = []
    for i in range(len(F)):
        if i in missing:
            continue
        trace = _trace_on_line(F.bodies[i], line)
        ts = [dot(v - base, direction) / scale for v in trace.vertices]
        segments.append((min(ts), max(ts)))
    if segments:
        shadows = Family(1, tuple(Interval(lo, hi) for lo, hi in segments))
        solved = sweep_piercing_1d(shadows)
        points.extend(base + direction.scaled(t) for t in solved.points)
    if len(points) > k + 1:
        raise AssertionError(f"construction produced {len(points)} > k+1 points")
    if not _certify(F, points):
        raise AssertionError("line piercing failed certification")
    return PiercingSet(points=tuple(sorted(points)), certified=True)


def _trace_on_line(body: ConvexPolygon, line: Line) -> ConvexPolygon:
    """The (degenerate) polygon body-on-line, for a body meeting the line."""
    trace = _clip_to_halfplane(body, line.a, line.b, line.c)
    return _clip_to_halfplane(trace, -line.a, -line.b, -line.c)
