"""Full subsets, components, and minimal connecting subsets.

In two dimensions a point set is a bipartite graph (rows are edges), a good
set is a forest, and a full set is a tree. The partition into maximal full
subsets is then exactly the partition into trees, and the minimal full
subset containing two edges is the path between them. The same notions run
in any dimension; dimension 2 just makes them easy to see.
"""

from goodsets import enumerate_full_subsets, full_components, family, geodesic, point_set

forest = point_set(
    [
        ["a", "p"], ["b", "p"], ["b", "q"],   # one tree
        ["u", "r"], ["v", "r"],               # another
    ],
    2,
)

print("full subsets of the forest, smallest first:")
for sub in enumerate_full_subsets(forest):
    print("  ", ", ".join(str(p) for p in sub))

part = full_components(forest)
print("\nmaximal full subsets (the trees):")
for block in part.blocks:
    print("  ", ", ".join(str(p) for p in block))

res = geodesic(forest, forest.points[0], forest.points[2])
print("\ngeodesic between", forest.points[0], "and", forest.points[2], "->",
      ", ".join(str(p) for p in res.subset))

res = geodesic(forest, forest.points[0], forest.points[3])
print("between different trees:", "found" if res.found else "no full subset contains both")

# in dimension 3 the same machinery exposes much stranger behavior: here is
# a 9-point set where the minimal full subset through two points is the
# entire set, even for points that look adjacent
f1 = family(1).completed
res = geodesic(f1, f1.points[0], f1.points[1])
print(f"\n9-point example: geodesic between {f1.points[0]} and {f1.points[1]}")
print(f"needs all {len(res.subset)} points, with {res.alternatives} alternatives")
