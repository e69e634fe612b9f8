"""Families of convex bodies and brute-force property verification.

A family is an ordered multiset of same-dimension bodies; duplicates are
distinct members (index identity), which the extremal constructions rely
on.  Everything here is exhaustive enumeration at desk scale: q-tuple
intersection flags are computed once per (family, q) and aggregated over
p-subsets, with a configurable hard work cap instead of silent truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from .errors import ArityError, BudgetExceededError, DimensionMismatchError
from .geometry import ConvexBody, Line, body_contains_point, intersect_bodies, line_meets_body

#: Hard cap on C(n,p) * C(p,q) aggregation work per query.
DEFAULT_WORK_BUDGET = 5_000_000


@dataclass(frozen=True)
class Family:
    """An ordered family of compact convex bodies sharing one dimension."""

    dimension: int
    bodies: tuple[ConvexBody, ...]

    def __post_init__(self):
        object.__setattr__(self, "bodies", tuple(self.bodies))
        if not self.bodies:
            raise ValueError("family must contain at least one body")
        if self.dimension not in (1, 2):
            raise ValueError("dimension must be 1 or 2")
        for body in self.bodies:
            if body.dimension != self.dimension:
                raise DimensionMismatchError(
                    f"body of dimension {body.dimension} in a "
                    f"{self.dimension}-dimensional family"
                )

    @classmethod
    def of(cls, bodies) -> "Family":
        bodies = tuple(bodies)
        if not bodies:
            raise ValueError("family must contain at least one body")
        return cls(bodies[0].dimension, bodies)

    def __len__(self) -> int:
        return len(self.bodies)


@dataclass(frozen=True)
class PQRReport:
    """Largest r for which every p-subset carries r intersecting q-tuples,
    together with a p-subset attaining that minimum."""

    p: int
    q: int
    max_r: int
    witness_subset: tuple[int, ...]


def _check_arity(F: Family, p: int, q: int) -> None:
    if q < 1 or p < 1:
        raise ArityError(f"p and q must be positive, got p={p}, q={q}")
    if q > p:
        raise ArityError(f"q={q} exceeds p={p}")
    if p > len(F):
        raise ArityError(f"p={p} exceeds family size {len(F)}")


@lru_cache(maxsize=256)
def _intersecting_qtuples(F: Family, q: int) -> frozenset[tuple[int, ...]]:
    """Index tuples of the q-subsets with nonempty common intersection.

    Depth-first over index prefixes, pruning any prefix whose running
    intersection is already empty (extensions stay empty).
    """
    n = len(F)
    found: set[tuple[int, ...]] = set()

    def extend(prefix: tuple[int, ...], region, start: int) -> None:
        for i in range(start, n):
            if n - i < q - len(prefix):
                break
            sub = intersect_bodies([region, F.bodies[i]]) if region is not None else F.bodies[i]
            if sub is None:
                continue
            chosen = prefix + (i,)
            if len(chosen) == q:
                found.add(chosen)
            else:
                extend(chosen, sub, i + 1)

    extend((), None, 0)
    return frozenset(found)


def count_intersecting_qtuples(F: Family, q: int) -> int:
    """Exact number of q-subsets of F whose members share a common point."""
    if q < 1:
        raise ArityError(f"q must be positive, got {q}")
    if q > len(F):
        raise ArityError(f"q={q} exceeds family size {len(F)}")
    return len(_intersecting_qtuples(F, q))


def f_vector(F: Family) -> tuple[int, ...]:
    """Entry j is the number of intersecting (j+1)-subsets, j = 0..n-1."""
    n = len(F)
    counts = [0] * n

    def extend(size: int, region, start: int) -> None:
        for i in range(start, n):
            sub = intersect_bodies([region, F.bodies[i]]) if region is not None else F.bodies[i]
            if sub is None:
                continue
            counts[size] += 1
            extend(size + 1, sub, i + 1)

    extend(0, None, 0)
    return tuple(counts)


def max_r(F: Family, p: int, q: int, work_budget: int = DEFAULT_WORK_BUDGET) -> PQRReport:
    """The largest r such that every p-subset of F contains at least r
    intersecting q-tuples (0 means the plain (p,q) property fails)."""
    _check_arity(F, p, q)
    n = len(F)
    work = comb(n, p) * comb(p, q) + comb(n, q)
    if work > work_budget:
        raise BudgetExceededError(
            f"max_r enumeration needs {work} steps, budget is {work_budget}"
        )
    flags = _intersecting_qtuples(F, q)
    best: Optional[int] = None
    witness: tuple[int, ...] = ()
    for subset in itertools.combinations(range(n), p):
        count = sum(1 for tup in itertools.combinations(subset, q) if tup in flags)
        if best is None or count < best:
            best, witness = count, subset
            if best == 0:
                break
    return PQRReport(p=p, q=q, max_r=best, witness_subset=witness)


def satisfies_pqr(F: Family, p: int, q: int, r: int,
                  work_budget: int = DEFAULT_WORK_BUDGET) -> bool:
    """Whether among any p members at least r of the q-tuples intersect."""
    if r < 1:
        raise ArityError(f"r must be >= 1, got {r}")
    return max_r(F, p, q, work_budget=work_budget).max_r >= r


def satisfies_pqr_through_line(F: Family, line: Line, p: int, q: int, r: int,
                               work_budget: int = DEFAULT_WORK_BUDGET) -> bool:
    """Whether among any p members at least r q-tuples intersect *on* the
    given line, i.e. their common region meets it."""
    if F.dimension != 2:
        raise DimensionMismatchError("through-line property is 2D only")
    if r < 1:
        raise ArityError(f"r must be >= 1, got {r}")
    _check_arity(F, p, q)
    n = len(F)
    work = comb(n, p) * comb(p, q) + comb(n, q)
    if work > work_budget:
        raise BudgetExceededError(
            f"through-line enumeration needs {work} steps, budget is {work_budget}"
        )
    on_line: set[tuple[int, ...]] = set()
    for tup in itertools.combinations(range(n), q):
        region = intersect_bodies([F.bodies[i] for i in tup])
        if region is not None and line_meets_body(line, region):
            on_line.add(tup)
    for subset in itertools.combinations(range(n), p):
        count = sum(1 for tup in itertools.combinations(subset, q) if tup in on_line)
        if count < r:
            return False
    return True


def degeneracy_level(F: Family):
    """Smallest t such that one point pierces all but t members, with a
    point attaining it.  Decided over the finite candidate-point set,
    which is sufficient for optimal piercing."""
    from .piercing import candidate_points

    best_count = -1
    best_point = None
    for point in candidate_points(F):
        count = sum(1 for body in F.bodies if body_contains_point(body, point))
        if count > best_count:
            best_count, best_point = count, point
    return len(F) - best_count, best_point


def is_t_degenerate(F: Family, t: int):
    """Whether some single point pierces at least |F| - t members.

    Returns (answer, witness point or None).
    """
    if t < 0:
        raise ArityError(f"t must be nonnegative, got {t}")
    level, point = degeneracy_level(F)
    if level <= t:
        return True, point
    return False, None
