"""The generated family and its structural checks.

family(n) grows a three-dimensional good set by five-point blocks. Each
instance has tightly coupled structure: adding one completion point makes it
full, certified by an exactly invertible square matrix; no boundary of the
base avoids the newest block; no subset short of the completion is full.
Every claim has a dedicated verifier that raises on any counterexample.
"""

from goodsets import (
    family,
    reduced_incidence,
    verify_block_properties,
    verify_full_via_inverse,
    verify_geodesic,
    verify_no_full_subsets,
    verify_prefix_boundary,
)

inst = family(2)
print(f"instance n=2: {len(inst.base)} base points, completion {inst.completion}")
for i, p in enumerate(inst.base):
    print(f"  {inst.point_name(i)} = {p}")

red = reduced_incidence(inst)
print(f"\nreduced matrix: {red.matrix.rows}x{red.matrix.cols}, rows", ", ".join(red.row_names))

for check in (
    verify_full_via_inverse,
    verify_prefix_boundary,
    verify_block_properties,
    verify_no_full_subsets,
    verify_geodesic,
):
    report = check(inst)
    print(f"{report.check}: {'ok' if report.passed else 'FAILED'}")

first_row = verify_full_via_inverse(inst).details["inverseFirstRow"]
print("\nfirst row of the exact inverse:", " ".join(first_row))
