"""Exact mean trace powers of random reduced density operators.

Draw a pure state of an (m*n)-dimensional bipartite system uniformly from
the unit sphere and trace out the n-dimensional side.  The mean of
Tr(rho^r) over states is an exact rational, computed here two independent
ways: evaluating the hypermap generating polynomial, and summing a
truncated alternating series of factorial quotients.
"""

from fractions import Fraction

from hypermaps import closed_form

print("mean Tr(rho^2) for an m-by-n system (rows m = 1..6, cols n = 1..6):")
for m in range(1, 7):
    row = [str(closed_form.avg_trace_power(m, n, 2)) for n in range(1, 7)]
    print(f"  m={m}:  " + "  ".join(f"{v:>8}" for v in row))

print()
print("powers of one qubit of a two-qubit random pure state (m = n = 2):")
for r in range(1, 9):
    a = closed_form.avg_trace_power(2, 2, r)
    b = closed_form.avg_trace_power_alt(2, 2, r)
    print(f"  r={r}:  {a}  (independent route agrees: {a == b})")

print()
print("sanity anchors: unit trace and one-dimensional purity")
print("  r=1, any m,n      ->", closed_form.avg_trace_power(6, 4, 1) == Fraction(1))
print("  m=n=1, any power  ->", closed_form.avg_trace_power(1, 1, 9) == Fraction(1))
