"""How large the inverse entries get, block by block.

The inverse of each instance's reduced matrix has absolute row sums that
stay bounded as the family grows. row_sum_bound_report pools the per-block
maxima over all instances up to n_max and fits the smallest constants with

    blockSum(m) <= c1 + c2 * (1 - 2^-m)

by an exact rational linear program. The fitted constants change with the
window, but the pooled maxima they must dominate stabilize quickly.
"""

from goodsets import row_sum_bound_report

for n_max in (2, 4, 8):
    rep = row_sum_bound_report(n_max)
    print(f"n_max = {n_max}: c1 = {rep.c1}, c2 = {rep.c2}")
    for m in sorted(rep.block_sums):
        print(f"   block {m}: max abs row sum {rep.block_sums[m]}  (bound {rep.bound(m)})")

rep = row_sum_bound_report(8)
print("\nper-instance block maxima (rows: instance n, columns: block m):")
for n in sorted(rep.per_instance):
    row = "  ".join(str(rep.per_instance[n][m]) for m in sorted(rep.per_instance[n]))
    print(f"  n={n}: {row}")
