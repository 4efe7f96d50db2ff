"""Unsigned Stirling numbers of the first kind, two ways.

c(r, k) counts the permutations of r elements with exactly k cycles.  The
whole row falls out of expanding the rising factorial m(m+1)...(m+r-1), and
the same numbers appear as the n = 1 marginal of the hypermap generating
polynomial: summing one-face maps over vertex counts leaves the edge
distribution, and edges of a one-face map are cycles of its edge permutation.
"""

from hypermaps import closed_form, enumeration

print("rows of c(r, k) for k = 1..r, from the rising factorial:")
for r in range(1, 9):
    print(f"  r={r}:  {closed_form.stirling_row(r)}")

print()
print("the same rows as cycle-count histograms over Sym_r:")
for r in range(1, 9):
    histogram = [0] * r
    for (cycles_sigma, _), count in enumeration.cycle_pair_counts([r]).items():
        histogram[cycles_sigma - 1] += count
    match = histogram == closed_form.stirling_row(r)
    print(f"  r={r}:  {histogram}  (matches: {match})")

print()
print("and as the n=1 marginal of the generating polynomial:")
for r in range(1, 9):
    marginal = closed_form.one_face_poly(r).substitute_n(1)
    row = [marginal.get(k, 0) for k in range(1, r + 1)]
    print(f"  r={r}:  {row}  (matches: {row == closed_form.stirling_row(r)})")
