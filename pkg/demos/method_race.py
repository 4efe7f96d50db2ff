"""Timing the factorial-time enumeration against the polynomial-time routes.

Enumeration costs about r * r! operations, so each extra dart multiplies the
run time by roughly r; the closed form and the recurrence stay polynomial
and reach dart counts the enumeration never will.  Times below are a single
run each, so treat them as shapes rather than benchmarks (the bench
subcommand of the CLI does medians over repetitions).
"""

import time

from hypermaps import closed_form, enumeration, recursion


def clock(fn):
    t0 = time.perf_counter()
    fn()
    return (time.perf_counter() - t0) * 1000.0


print("enumeration, r = 5..9 (each step roughly r times slower):")
previous = None
for r in range(5, 10):
    ms = clock(lambda: enumeration.one_face_poly(r))
    growth = f"  ({ms / previous:.1f}x the previous r)" if previous else ""
    print(f"  r={r}:  {ms:8.1f} ms{growth}")
    previous = ms

print()
print("closed form, far beyond the enumeration ceiling:")
for r in (13, 25, 50):
    ms = clock(lambda: closed_form.one_face_poly(r))
    print(f"  r={r}:  {ms:8.1f} ms")

print()
print("recurrence stream, all polynomials up to r = 50 in one pass:")
ms = clock(lambda: list(recursion.stream(50)))
print(f"  r=1..50:  {ms:8.1f} ms")
