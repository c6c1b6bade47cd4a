"""Splitting a function of three variables into one-variable parts.

A set of tuples is "good" when every function on it can be written as
f(p) = u1(p1) + u2(p2) + u3(p3). This walk-through builds a small good set,
finds a boundary (the coordinates whose values pin the answer down), and
solves for the u_i.
"""

from fractions import Fraction

from goodsets import decompose, find_boundary, is_good, point_set

s = point_set(
    [
        ["mon", "alice", "home"],
        ["tue", "alice", "home"],
        ["tue", "bob", "office"],
    ],
    3,
)
print("points:")
for p in s:
    print("  ", p)

print("\ngood?", is_good(s))

boundary = find_boundary(s)
print("boundary coordinates:", ", ".join(str(lab) for lab in boundary))
print("(pinning these", len(boundary), "values makes the split unique)")

f = {
    s.points[0]: Fraction(10),
    s.points[1]: Fraction(12),
    s.points[2]: Fraction(7),
}
dec = decompose(s, f)
print("\nwith the boundary pinned to zero:")
for axis in (1, 2, 3):
    parts = ", ".join(f"{lab.symbol} -> {val}" for lab, val in dec.component(axis).items())
    print(f"  u{axis}: {parts}")

print("\nre-evaluating u1 + u2 + u3 at every point:")
for p in s:
    print(f"  {p}: {dec.value_at(p)}  (expected {f[p]})")

# the same f, but now insisting that Monday is worth 3 and Alice is worth 4
pinned = {boundary.labels[0]: Fraction(3), boundary.labels[1]: Fraction(4)}
pinned.update({lab: Fraction(0) for lab in boundary if lab not in pinned})
dec2 = decompose(s, f, boundary=boundary, boundary_values=pinned)
print("\nsame function, different boundary values:")
for axis in (1, 2, 3):
    parts = ", ".join(f"{lab.symbol} -> {val}" for lab, val in dec2.component(axis).items())
    print(f"  u{axis}: {parts}")
print("the sums are unchanged:", all(dec2.value_at(p) == f[p] for p in s))
