"""Closed-form piercing thresholds and the intersection-count bound.

Every function works in exact big-integer arithmetic with the convention
C(n, k) = 0 outside 0 <= k <= n (the sums below silently rely on
vanishing terms).  Thresholds are the exact binomial sums from the
underlying proofs, not their asymptotic forms, so each returned value is
certifiable at desk scale.  Fractional exponents are compared exactly:
m >= p^(a/b) is decided as m^b >= p^a over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ArityError

#: Attached whenever a result relies on an asymptotic hypothesis whose
#: explicit constant is unknown.
CAVEAT_P0_UNKNOWN = "requires p >= p0(epsilon), p0 unknown"

#: Attached to results that presume no single point pierces all but p-q members.
CAVEAT_NON_DEGENERATE = "requires non-(p-q)-degenerate family"


@dataclass(frozen=True)
class BoundResult:
    """Smallest r certified by a threshold formula and the piercing number
    it guarantees, plus applicability caveats."""

    threshold_r: int
    pierce_bound: int
    caveats: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.threshold_r < 1 or self.pierce_bound < 1:
            raise ValueError("threshold_r and pierce_bound must be >= 1")


def binom(n: int, k: int) -> int:
    """C(n, k), zero when k < 0, n < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check_standing(p: int, q: int, d: int) -> None:
    if d < 1:
        raise ArityError(f"d must be >= 1, got {d}")
    if d == 1:
        if not p >= q >= 2:
            raise ArityError(f"need p >= q >= 2 in dimension 1, got p={p}, q={q}")
    elif not p >= q >= d + 1:
        raise ArityError(f"need p >= q >= d+1, got p={p}, q={q}, d={d}")


def kalai_bound(p: int, q: int, s: int, d: int) -> int:
    """Upper bound on the number of intersecting q-tuples among p convex
    bodies in dimension d, valid whenever no (d+s+1)-tuple intersects:
    sum_{i=0}^{d} C(s, q-i) * C(p-s, i)."""
    if p < 1 or q < 1 or s < 0 or d < 1:
        raise ArityError(f"invalid kalai_bound arguments p={p}, q={q}, s={s}, d={d}")
    return sum(binom(s, q - i) * binom(p - s, i) for i in range(d + 1))


def ms_threshold(p: int, q: int, d: int) -> BoundResult:
    """Threshold above which p-q+1 points always suffice:
    r > C(p,q) - C(p+1-d, q+1-d)."""
    _check_standing(p, q, d)
    return BoundResult(
        threshold_r=binom(p, q) - binom(p + 1 - d, q + 1 - d) + 1,
        pierce_bound=p - q + 1,
    )


def lemma_r0_threshold(p: int, q: int, d: int, f: int) -> BoundResult:
    """Threshold certifying piercing by f points for 1 <= f <= p/d - 1:
    r >= kalai_bound(p, q, p-f-d, d) + 1."""
    _check_standing(p, q, d)
    if f < 1 or d * (f + 1) > p:
        raise ArityError(f"need 1 <= f <= p/d - 1, got f={f}, p={p}, d={d}")
    return BoundResult(
        threshold_r=kalai_bound(p, q, p - f - d, d) + 1,
        pierce_bound=f,
    )


def _floor_root(x: int, k: int) -> int:
    """floor(x^(1/k)) by integer Newton iteration."""
    if x < 2 or k == 1:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)  # certified upper bound
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            return r
        r = nr


def ceil_power(p: int, exponent: Fraction) -> int:
    """Smallest integer m with m >= p^exponent, decided exactly over the
    integers (m >= p^(a/b) iff m^b >= p^a)."""
    if p < 1 or exponent < 0:
        raise ArityError(f"need p >= 1 and exponent >= 0, got p={p}, e={exponent}")
    num, den = exponent.numerator, exponent.denominator
    target = p**num
    root = _floor_root(target, den)
    return root if root**den == target else root + 1


def remark_threshold(p: int, q: int, d: int, f: int,
                     epsilon: Fraction | None = None) -> BoundResult:
    """Strict-inequality variant certifying piercing by f points:
    r > sum_i C(p-f+1-d, q-i) * C(f-1+d, i).

    When epsilon is given, the admissible range
    f <= p - ceil(p^((d-1)/d + epsilon)) + 2 is enforced; without it only
    f >= 1 is checked.  Either way the result carries the unknown-constant
    caveat.
    """
    _check_standing(p, q, d)
    if f < 1:
        raise ArityError(f"need f >= 1, got f={f}")
    if epsilon is not None:
        epsilon = Fraction(epsilon)
        if epsilon <= 0:
            raise ArityError(f"epsilon must be positive, got {epsilon}")
        m = ceil_power(p, Fraction(d - 1, d) + epsilon)
        if f > p - m + 2:
            raise ArityError(f"need f <= p - ceil(p^((d-1)/d+eps)) + 2 = {p - m + 2}, got {f}")
    return BoundResult(
        threshold_r=kalai_bound(p, q, p - f + 1 - d, d) + 1,
        pierce_bound=f,
        caveats=(CAVEAT_P0_UNKNOWN,),
    )


def thm2_threshold(p: int, q: int, d: int, epsilon: Fraction) -> BoundResult:
    """Exact threshold behind the large-q asymptotic bound.

    With M = ceil(p^((d-1)/d + epsilon)): if q > M the certified piercing
    number is p-q+1 at r = kalai_bound(p, q, q-d, d) + 1; otherwise, with
    k = M - q, it is p-(q+k)+2 at r = kalai_bound(p, q, q+k-d-1, d) + 1.
    Valid only for p beyond an unknown p0(epsilon), recorded as a caveat.
    """
    _check_standing(p, q, d)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ArityError(f"epsilon must be positive, got {epsilon}")
    m = ceil_power(p, Fraction(d - 1, d) + epsilon)
    if q > m:
        return BoundResult(
            threshold_r=kalai_bound(p, q, q - d, d) + 1,
            pierce_bound=p - q + 1,
            caveats=(CAVEAT_P0_UNKNOWN,),
        )
    k = m - q
    return BoundResult(
        threshold_r=kalai_bound(p, q, q + k - d - 1, d) + 1,
        pierce_bound=p - (q + k) + 2,
        caveats=(CAVEAT_P0_UNKNOWN,),
    )


def m0(p: int, q: int, k: int) -> int:
    """Smallest m with C(m+1, 2) >= (p-q-k-1)(p-q+k+2)/2 + 1."""
    if not p >= q:
        raise ArityError(f"need p >= q, got p={p}, q={q}")
    if not 0 <= k <= p - q - 1:
        raise ArityError(f"need 0 <= k <= p-q-1, got k={k}, p={p}, q={q}")
    product = (p - q - k - 1) * (p - q + k + 2)
    assert product % 2 == 0  # the factors always differ by an odd number
    target = product // 2 + 1
    m = 1
    while binom(m + 1, 2) < target:
        m += 1
    return m


def thm3_threshold(p: int, q: int, d: int, k: int) -> BoundResult:
    """Threshold certifying piercing by k+2 points for non-(p-q)-degenerate
    families, interpolating between the extreme cases k = 0 and
    k = p-q-1 (where it coincides with :func:`ms_threshold`)."""
    _check_standing(p, q, d)
    if not 0 <= k <= p - q - 1:
        raise ArityError(f"need 0 <= k <= p-q-1, got k={k}, p={p}, q={q}")
    m = m0(p, q, k)
    threshold = (
        binom(p, q)
        - binom(p - d + 1, q - d + 1)
        + 1
        + binom(q - d - 2 + m, q - d)
        + binom(q - d - 1 + m, q - d + 1)
    )
    return BoundResult(
        threshold_r=threshold,
        pierce_bound=k + 2,
        caveats=(CAVEAT_NON_DEGENERATE,),
    )


def dim1_threshold(p: int, q: int, k: int) -> BoundResult:
    """Tight 1D threshold: r >= C(p-k-2, q) + (k+2) C(p-k-2, q-1) + 1
    certifies piercing by k+1 points, and a family one r below exists that
    needs k+2."""
    if not p >= q >= 2:
        raise ArityError(f"need p >= q >= 2, got p={p}, q={q}")
    if not 0 <= k <= p - q:
        raise ArityError(f"need 0 <= k <= p-q, got k={k}, p={p}, q={q}")
    return BoundResult(
        threshold_r=binom(p - k - 2, q) + (k + 2) * binom(p - k - 2, q - 1) + 1,
        pierce_bound=k + 1,
    )


def hd_exact_region(p: int, q: int, d: int):
    """p-q+1 when d*q > (d-1)*p + d (the regime where the plain (p,q)
    property already pins the worst-case piercing number), else None."""
    _check_standing(p, q, d)
    if d * q > (d - 1) * p + d:
        return p - q + 1
    return None


def implied_q(p: int, q: int, r: int, d: int) -> int:
    """Largest q' in [q, p] such that every family with the (p,q)_r
    property must satisfy the (p,q') property; q itself when r certifies
    no enlargement.

    A p-subset with no intersecting q'-tuple has f_{q'-1} = 0, so its
    q-tuple count is capped by kalai_bound(p, q, q'-1-d, d); r above that
    cap forces an intersecting q'-tuple.
    """
    _check_standing(p, q, d)
    if r < 1:
        raise ArityError(f"r must be >= 1, got {r}")
    for q_prime in range(p, q, -1):
        if r > kalai_bound(p, q, q_prime - 1 - d, d):
            return q_prime
    return q
