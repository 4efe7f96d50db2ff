"""Generating functions and totals for two-face rooted hypermaps.

A two-face diagram with r darts splits the face permutation into two loops of
lengths a and b with a + b = r.  The plain permutation sum over Sym_r for
that split (face_shape_poly) over-counts in two ways: it includes diagrams
where the two loops never get joined (disconnected, hence not a hypermap),
and it counts each connected diagram b times, once per cyclic shift of the
unrooted second loop.  So for each split the disconnected part, which is
exactly the product of the two one-face polynomials, is subtracted, the
difference is divided by b, and the splits b = 1..r-1 are summed.

Divisibility by b of each difference is asserted, not assumed: the division
raises NotDivisible if the equivalence classes ever fail to have size b,
which would be a real finding rather than something to hide.

connected_two_face_oracle recomputes the same polynomial a second,
structurally different way, by enumerating only the sigma whose joint action
with the two-loop face permutation is transitive.  The subtraction route and
the transitive-filter route must agree coefficient for coefficient.

There is a closed-form total (valid for any r, no enumeration):

    sum over b = 1..r-1 of (r! - b!(r-b)!) / b

but no closed form for the polynomial itself, so the generating function is
only available within the enumeration ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Optional

from .polynomial import BivarPoly
from .enumeration import DEFAULT_ENUM_CEILING, _check_ceiling, cycle_pair_counts
from . import closed_form


@dataclass(frozen=True)
class TwoFaceResult:
    """Generating polynomial and total count for two-face maps with r darts."""

    r: int
    gf: BivarPoly
    total: int


def two_face_gf(
    r: int,
    *,
    ceiling: Optional[int] = DEFAULT_ENUM_CEILING,
    workers: int = 1,
) -> TwoFaceResult:
    """Generating polynomial for two-face rooted hypermaps with r darts.

    Coefficient of m^e*n^v counts maps with e edges and v vertices.  Each
    split's two-loop sum comes from the enumeration oracle; the disconnected
    part it subtracts is the product of one-face polynomials from the
    polynomial-time closed form.
    """
    if r < 2:
        raise ValueError("two-face maps need at least 2 darts")
    _check_ceiling(r, ceiling)
    gf = BivarPoly.zero()
    for b in range(1, r):
        a = r - b
        both_loops = BivarPoly(
            cycle_pair_counts([a, b], ceiling=ceiling, workers=workers)
        )
        disconnected = closed_form.one_face_poly(a) * closed_form.one_face_poly(b)
        gf = gf + (both_loops - disconnected).exact_div(b)
    return TwoFaceResult(r, gf, gf.eval_at(1, 1))


def two_face_total(r: int) -> int:
    """Number of two-face rooted hypermaps with r darts, by the closed formula.

    No enumeration involved, so this is exact for r far beyond the ceiling.
    Both r! and b!(r-b)! are individually divisible by b, so the division is
    exact term by term.
    """
    if r < 2:
        raise ValueError("two-face maps need at least 2 darts")
    r_fact = factorial(r)
    return sum((r_fact - factorial(b) * factorial(r - b)) // b for b in range(1, r))


def connected_two_face_oracle(
    r: int,
    *,
    ceiling: Optional[int] = DEFAULT_ENUM_CEILING,
    workers: int = 1,
) -> BivarPoly:
    """Ground-truth two-face polynomial via transitivity-filtered enumeration.

    For each split, sums the monomials of exactly those sigma that join the
    two loops into one connected diagram, then divides the per-split sum by b
    (the cyclic degeneracy of the unrooted loop).  Independent of the
    subtraction performed by two_face_gf, which it must match.
    """
    if r < 2:
        raise ValueError("two-face maps need at least 2 darts")
    _check_ceiling(r, ceiling)
    gf = BivarPoly.zero()
    for b in range(1, r):
        a = r - b
        counts = cycle_pair_counts(
            [a, b], connected_only=True, ceiling=ceiling, workers=workers
        )
        gf = gf + BivarPoly(counts).exact_div(b)
    return gf
