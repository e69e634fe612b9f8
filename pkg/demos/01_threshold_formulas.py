"""Walk through the threshold calculators on small parameters.

Every number printed here is an exact big integer: the smallest r such
that a family in which any p members always carry r intersecting
q-tuples is guaranteed pierceable by the stated number of points.
"""

from fractions import Fraction

from pqpierce import (
    dim1_threshold,
    hd_exact_region,
    implied_q,
    kalai_bound,
    lemma_r0_threshold,
    ms_threshold,
    thm2_threshold,
    thm3_threshold,
)

print("=== The worked example at (p, q, d) = (6, 3, 2) ===")
print("There are C(6,3) = 20 triples inside any 6 bodies. How many of them")
print("must intersect before a small piercing set is guaranteed?\n")
for label, result in [
    ("near-total overlap  ", ms_threshold(6, 3, 2)),
    ("count-based, 2 pts  ", lemma_r0_threshold(6, 3, 2, 2)),
    ("bootstrapped, 2 pts ", thm3_threshold(6, 3, 2, 0)),
]:
    print(
        f"  {label} r >= {result.threshold_r:>3}  ->  pierced by {result.pierce_bound}"
        + (f"   (caveats: {', '.join(result.caveats)})" if result.caveats else "")
    )
print()
print("The bootstrap beats the plain counting route 16 vs 17 for two points,")
print("and r = 11 already guarantees four points.\n")

print("=== Interpolation collapses to the classical bound at k = p-q-1 ===")
for p, q, d in [(6, 3, 2), (9, 4, 2), (12, 5, 3)]:
    a = thm3_threshold(p, q, d, p - q - 1).threshold_r
    b = ms_threshold(p, q, d).threshold_r
    print(f"  (p={p}, q={q}, d={d}):  {a} == {b}")
print()

print("=== Dimension 1 is exactly solved ===")
print("threshold(p, q, k) certifies k+1 points; one r lower is attainable")
print("by k+2 singletons plus covering segments (see demo 02).\n")
print("  p  q  k   threshold  pierce")
for p, q, k in [(4, 2, 0), (6, 3, 1), (8, 3, 2), (9, 4, 0), (7, 2, 5)]:
    r = dim1_threshold(p, q, k)
    print(f"  {p}  {q}  {k}   {r.threshold_r:>9}  {r.pierce_bound:>6}")
print()

print("=== The q-enlargement engine ===")
print("A high intersecting-triple count forces intersecting q'-tuples for")
print("larger q', where the piercing number is pinned exactly:\n")
for r in (11, 17):
    qp = implied_q(6, 3, r, 2)
    region = hd_exact_region(6, qp, 2)
    tail = f"piercing number exactly {region}" if region else "outside the exact regime"
    print(f"  (6,3) with r = {r}: implies the (6,{qp}) property -> {tail}")
print()

print("=== Intersection-count ceiling ===")
print("If no d+s+1 bodies share a point, the number of intersecting")
print("q-tuples among p bodies is capped:\n")
for s in range(0, 4):
    print(f"  s = {s}: cap on triples among 8 planar bodies = {kalai_bound(8, 3, s, 2)}")
print()

print("=== Asymptotic-flavored threshold, evaluated exactly ===")
result = thm2_threshold(16, 8, 2, Fraction(1, 2))
print(f"  (p=16, q=8, d=2, eps=1/2): r >= {result.threshold_r} -> {result.pierce_bound} points")
print(f"  caveats: {result.caveats[0]}")
