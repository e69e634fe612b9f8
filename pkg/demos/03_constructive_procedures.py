"""The constructive piercing pipeline, end to end.

Three procedures build certified piercing sets instead of searching:

1. the recursive construction for families with the (p,q) property in
   the regime d*q > (d-1)*p + d (at most p-q+1 points),
2. the guarantee-line construction: a pair (A, B) and a line crossed by
   every body meeting both,
3. piercing through a line: off-line bodies at their lexmax, on-line
   traces solved as 1D segments.
"""

from fractions import Fraction

from pqpierce import (
    Family,
    Interval,
    Line,
    hd_pierce,
    intersect_bodies,
    line_meets_body,
    line_pierce,
    min_piercing,
    ms_line,
    pt,
    satisfies_pqr_through_line,
)
from pqpierce.geometry import ConvexPolygon


def box(x0, y0, x1, y1):
    return ConvexPolygon.from_points([pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)])


print("=== Recursive construction in 1D ===")
F = Family.of([Interval(0, 1), Interval(Fraction(1, 2), 2), Interval(3, 4)])
result = hd_pierce(F, 3, 2)
print("intervals [0,1], [1/2,2], [3,4] with the (3,2) property")
print("  first kept point is the smallest right endpoint, then recurse:")
print("  ->", [str(p) for p in result.points], f"(budget p-q+1 = 2, certified: {result.certified})")
print()

print("=== Recursive construction in 2D ===")
G = Family.of(
    [
        box(0, 0, 4, 4),
        box(2, 2, 6, 6),
        box(2, 0, 5, 4),
        box(3, 1, 7, 5),
        box(10, 10, 11, 11),
    ]
)
result = hd_pierce(G, 5, 4)
print("four overlapping squares + one far square, (p,q) = (5,4):")
print("  ->", [(str(p.x), str(p.y)) for p in result.points])
print("  exact minimum for comparison:", len(min_piercing(G)))
print()

print("=== The guarantee line ===")
H = Family.of([box(0, 0, 2, 2), box(1, -1, 3, 1), box(0, 0, 3, 1)])
witness = ms_line(H)
line = witness.line
print("for any planar family there are members A, B and a line such that")
print("every body meeting both A and B must cross the line:")
print(f"  A = body {witness.A_index}, B = body {witness.B_index}, "
      f"line {line.a}x + {line.b}y = {line.c}, anchor x0 = "
      f"{None if witness.x0 is None else (str(witness.x0.x), str(witness.x0.y))}")
for idx, C in enumerate(H.bodies):
    meets_a = intersect_bodies([H.bodies[witness.A_index], C]) is not None
    meets_b = intersect_bodies([H.bodies[witness.B_index], C]) is not None
    print(f"  body {idx}: meets A: {meets_a}, meets B: {meets_b}, "
          f"crosses line: {line_meets_body(line, C)}")
print()

print("=== Piercing through a line ===")
axis = Line(0, 1, 0)
R = Family.of(
    [box(0, -1, 2, 1), box(1, -1, 3, 1), box(0, -2, 3, 2), box(5, 5, 6, 6)]
)
r0 = 1
print("three rectangles crossing the x-axis plus one body far off it;")
print("  through-line property (3,2)_1 holds:",
      satisfies_pqr_through_line(R, axis, 3, 2, r0))
result = line_pierce(R, axis, 3, 1)
print("  ->", [(str(p.x), str(p.y)) for p in result.points],
      f"(k+1 = 2 points, certified: {result.certified})")
