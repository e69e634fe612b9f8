"""Exact rational primitives: intervals, convex polygons, lines.

All coordinates are `fractions.Fraction`, so every predicate (membership,
sidedness, intersection emptiness) is decided exactly.  That matters here:
the lexicographic-extremum constructions built on top of this module are
degenerate-sensitive, and an epsilon tolerance would silently break the
tightness arguments they support.

Degenerate convex polygons are first class: a single point has one vertex,
a segment has two.  Everything is immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .errors import DimensionMismatchError, PremiseViolationError

#: Exact scalar type used for every coordinate.
Rational = Fraction


def rational(value) -> Fraction:
    """Coerce an int, string ("3/4"), or Fraction to an exact Fraction."""
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    """A 2D point; comparison is lexicographic (x first, then y)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, t) -> "Point":
        t = Fraction(t)
        return Point(self.x * t, self.y * t)


def pt(x, y) -> Point:
    """Shorthand constructor accepting ints, strings, or Fractions."""
    return Point(Fraction(x), Fraction(y))


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def orient(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of (o, a, b); > 0 means a left turn."""
    return cross(a - o, b - o)


def sqdist(u: Point, v: Point) -> Fraction:
    d = u - v
    return d.x * d.x + d.y * d.y


@dataclass(frozen=True, order=True)
class Interval:
    """A compact nonempty segment [lo, hi] on the real line."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def dimension(self) -> int:
        return 1

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi


def convex_hull(points: Iterable[Point]) -> tuple[Point, ...]:
    """Convex hull in counter-clockwise order, lexicographically smallest
    vertex first, collinear interior points dropped.

    Collinear inputs hull to their two extreme points; coincident inputs
    to a single point.  This is also the canonical vertex form used by
    ConvexPolygon, so ``convex_hull(poly.vertices) == poly.vertices``.
    """
    pts = sorted(set(points))
    if len(pts) <= 1:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class ConvexPolygon:
    """A compact convex region given by its canonical vertex tuple.

    Vertices are counter-clockwise starting from the lexicographically
    smallest one, with no three collinear vertices stored.  One vertex is
    a point, two are a segment.  Construction re-derives the hull and
    rejects any argument that is not already canonical; use
    :meth:`from_points` to build from an arbitrary point set.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("polygon needs at least one vertex")
        if convex_hull(verts) != verts:
            raise ValueError(f"vertices not in canonical convex position: {verts}")

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "ConvexPolygon":
        hull = convex_hull(points)
        if not hull:
            raise ValueError("no points given")
        return cls(hull)

    @property
    def dimension(self) -> int:
        return 2

    def halfplanes(self) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
        """Halfplanes (a, b, c), each meaning a*x + b*y <= c, whose
        intersection is exactly this region (degenerate cases included)."""
        v = self.vertices
        if len(v) == 1:
            p = v[0]
            one = Fraction(1)
            return (
                (one, Fraction(0), p.x),
                (-one, Fraction(0), -p.x),
                (Fraction(0), one, p.y),
                (Fraction(0), -one, -p.y),
            )
        if len(v) == 2:
            u, w = v
            d = w - u
            # on the supporting line, and between the endpoints
            return (
                (d.y, -d.x, d.y * u.x - d.x * u.y),
                (-d.y, d.x, -(d.y * u.x - d.x * u.y)),
                (-d.x, -d.y, -(d.x * u.x + d.y * u.y)),
                (d.x, d.y, d.x * w.x + d.y * w.y),
            )
        planes = []
        n = len(v)
        for i in range(n):
            u, w = v[i], v[(i + 1) % n]
            a = w.y - u.y
            b = u.x - w.x
            planes.append((a, b, a * u.x + b * u.y))
        return tuple(planes)

    def contains(self, p: Point) -> bool:
        return all(a * p.x + b * p.y <= c for a, b, c in self.halfplanes())


ConvexBody = Union[Interval, ConvexPolygon]


@dataclass(frozen=True, order=True)
class Line:
    """The locus a*x + b*y = c with (a, b) != (0, 0).

    Stored in a normalized representative: integer coefficients with no
    common factor and the leading nonzero of (a, b) positive, so equal
    lines compare equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a = b = 0")
        scale = a.denominator * b.denominator * c.denominator
        ia, ib, ic = int(a * scale), int(b * scale), int(c * scale)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", Fraction(ia))
        object.__setattr__(self, "b", Fraction(ib))
        object.__setattr__(self, "c", Fraction(ic))

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        if p == q:
            raise ValueError("two distinct points required")
        return cls.from_point_direction(p, q - p)

    @classmethod
    def from_point_direction(cls, p: Point, d: Point) -> "Line":
        if d.x == 0 and d.y == 0:
            raise ValueError("zero direction")
        return cls(d.y, -d.x, d.y * p.x - d.x * p.y)

    def side(self, p: Point) -> Fraction:
        """Exact signed evaluation a*x + b*y - c (0 means on the line)."""
        return self.a * p.x + self.b * p.y - self.c

    def direction(self) -> Point:
        return Point(-self.b, self.a)

    def some_point(self) -> Point:
        """A rational point on the line."""
        if self.b != 0:
            return Point(Fraction(0), self.c / self.b)
        return Point(self.c / self.a, Fraction(0))


def _cyclic_edges(verts: Sequence[Point]) -> list[tuple[int, int]]:
    n = len(verts)
    if n == 1:
        return []
    if n == 2:
        return [(0, 1), (1, 0)]
    return [(i, (i + 1) % n) for i in range(n)]


def _clip_halfplane(
    verts: tuple[Point, ...], a: Fraction, b: Fraction, c: Fraction
) -> Optional[tuple[Point, ...]]:
    """Clip canonical convex vertices to {a*x + b*y <= c}; None if empty."""
    sides = [a * v.x + b * v.y - c for v in verts]
    if len(verts) == 1:
        return verts if sides[0] <= 0 else None
    kept: list[Point] = [v for v, s in zip(verts, sides) if s <= 0]
    for i, j in _cyclic_edges(verts):
        si, sj = sides[i], sides[j]
        if (si < 0 < sj) or (sj < 0 < si):
            t = si / (si - sj)
            kept.append(verts[i] + (verts[j] - verts[i]).scaled(t))
    if not kept:
        return None
    return convex_hull(kept)


def intersect_bodies(bodies: Sequence[ConvexBody]) -> Optional[ConvexBody]:
    """Exact common intersection of the bodies, or None when empty.

    All bodies must share one dimension.  In 2D the result is computed by
    successively clipping the first body with every supporting halfplane
    of the others.
    """
    bodies = list(bodies)
    if not bodies:
        raise ValueError("need at least one body")
    dims = {body.dimension for body in bodies}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed dimensions: {sorted(dims)}")
    if dims == {1}:
        lo = max(body.lo for body in bodies)
        hi = min(body.hi for body in bodies)
        return Interval(lo, hi) if lo <= hi else None
    verts = bodies[0].vertices
    for body in bodies[1:]:
        for a, b, c in body.halfplanes():
            verts = _clip_halfplane(verts, a, b, c)
            if verts is None:
                return None
    return ConvexPolygon(verts)


def lexmax_body(body: ConvexBody):
    """The unique lexicographically maximal point of the body.

    For a polygon this is a vertex; for an interval it is ``hi`` (the 1D
    embedding of the same idea).
    """
    if body.dimension == 1:
        return body.hi
    return max(body.vertices)


def lexmin_body(body: ConvexBody):
    """Lexicographically minimal point, dual to :func:`lexmax_body`."""
    if body.dimension == 1:
        return body.lo
    return min(body.vertices)


def body_contains_point(body: ConvexBody, p) -> bool:
    """Exact closed-set membership; 1D points are plain rationals."""
    if body.dimension == 1:
        if isinstance(p, Point):
            raise DimensionMismatchError("interval queried with a 2D point")
        return body.contains(p)
    if not isinstance(p, Point):
        raise DimensionMismatchError("polygon queried with a 1D value")
    return body.contains(p)


def line_meets_body(line: Line, body: ConvexBody) -> bool:
    """True iff the body's vertices do not all lie strictly on one side."""
    if body.dimension != 2:
        raise DimensionMismatchError("line incidence is a 2D predicate")
    sides = [line.side(v) for v in body.vertices]
    return min(sides) <= 0 <= max(sides)


def _edges(poly: ConvexPolygon) -> list[tuple[Point, Point]]:
    v = poly.vertices
    if len(v) == 1:
        return []
    if len(v) == 2:
        return [(v[0], v[1])]
    return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def _closest_on_segment(p: Point, u: Point, w: Point) -> Point:
    d = w - u
    den = dot(d, d)
    if den == 0:
        return u
    t = dot(p - u, d) / den
    t = min(max(t, Fraction(0)), Fraction(1))
    return u + d.scaled(t)


def _closest_pair(A: ConvexPolygon, B: ConvexPolygon) -> tuple[Point, Point]:
    """Deterministic closest pair (point of A, point of B); exact, and
    attained at a vertex of one body and a vertex or edge of the other."""
    cands: list[tuple[Point, Point]] = []
    for v in A.vertices:
        if _edges(B):
            cands.extend((v, _closest_on_segment(v, u, w)) for u, w in _edges(B))
        else:
            cands.append((v, B.vertices[0]))
    for v in B.vertices:
        if _edges(A):
            cands.extend((_closest_on_segment(v, u, w), v) for u, w in _edges(A))
        else:
            cands.append((A.vertices[0], v))
    return min(cands, key=lambda pair: (sqdist(pair[0], pair[1]), pair))


def separating_line(A: ConvexPolygon, B: ConvexPolygon) -> Line:
    """A line with disjoint A and B strictly on opposite sides.

    Computed as the perpendicular bisector of the closest pair, which for
    disjoint compact convex sets always separates strictly and has
    rational coordinates.  Raises PremiseViolationError if the bodies
    intersect.
    """
    if A.dimension != 2 or B.dimension != 2:
        raise DimensionMismatchError("separating_line is 2D only")
    if intersect_bodies([A, B]) is not None:
        raise PremiseViolationError("bodies intersect; no separating line exists")
    pa, pb = _closest_pair(A, B)
    n = pb - pa
    mid = (pa + pb).scaled(Fraction(1, 2))
    line = Line(n.x, n.y, dot(n, mid))
    sa = [line.side(v) for v in A.vertices]
    sb = [line.side(v) for v in B.vertices]
    if not ((max(sa) < 0 < min(sb)) or (max(sb) < 0 < min(sa))):
        raise AssertionError("bisector failed to separate; closest pair bug")
    return line
