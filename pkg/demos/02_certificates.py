"""Why some sets refuse to split, with a checkable witness.

The four corners of a 2x2 grid are the smallest example: any additive
f(x, y) = u(x) + v(y) must satisfy f(x,a) + f(y,b) = f(x,b) + f(y,a), so a
function breaking that identity cannot split. analyze_goodness returns the
corresponding weights as a certificate.
"""

from fractions import Fraction

from goodsets import analyze_goodness, build_incidence, point_set

grid = point_set([["x", "a"], ["x", "b"], ["y", "a"], ["y", "b"]], 2)
report = analyze_goodness(grid)

print("points:", ", ".join(str(p) for p in grid))
print("good?", report.is_good)
print("rank", report.rank, "for", report.point_count, "points")

cert = report.certificate
print("\ncertificate weights:")
for p, w in cert.nonzero().items():
    sign = "+" if w > 0 else "-"
    print(f"  {sign}{abs(w)} * row{p}")

# the weighted rows really do cancel
inc = build_incidence(grid)
total = [Fraction(0)] * inc.matrix.cols
for i, p in enumerate(grid):
    w = cert.weights[p]
    total = [t + w * x for t, x in zip(total, inc.matrix.row(i))]
print("weighted row sum:", [str(t) for t in total])

# and any f with a nonzero weighted sum is a concrete obstruction
f = {grid.points[0]: 1, grid.points[1]: 0, grid.points[2]: 0, grid.points[3]: 0}
obstruction = sum(cert.weights[p] * v for p, v in f.items())
print(f"\nfor f = (1, 0, 0, 0) the weighted value sum is {obstruction} != 0,")
print("so no u(x) + v(y) can reproduce this f.")
