"""Three-term recurrence for the one-face generating polynomials.

Writing P_r for the generating polynomial with r darts, the recurrence is

    (r+3) P_{r+2} = (2r+3)(m+n) P_{r+1} + r[(r+1)^2 - (m-n)^2] P_r,   r >= 1,

with P_1 = mn and P_2 = m^2*n + m*n^2.  The division by r+3 is always exact;
a remainder (NotDivisible) means the state was corrupted.  Stepping the
recurrence is the fastest way to produce every polynomial up to some order.

The recurrence is certified by a telescoping companion identity: with F(r, k)
the k-th summand of the closed-form sum, there is an explicitly given G(r, k)
such that

    (r+3)F(r+2,k) - (2r+3)(m+n)F(r+1,k) + r[(m-n)^2 - (r+1)^2]F(r,k)
        = G(r,k+1) - G(r,k),

with F zero outside 0 <= k < r and G zero outside 1 <= k <= r+1.  Summing
over k telescopes the right side to zero and turns each F-sum into a P,
which is the recurrence.  verify_certificate checks the identity for one
(r, k) as an exact equality of integer polynomials, after multiplying both
sides by (r+2)! so no rational polynomial type is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomial import M, N, BivarPoly
from .closed_form import rising_ratio

_P1 = BivarPoly({(1, 1): 1})
_P2 = BivarPoly({(2, 1): 1, (1, 2): 1})


@dataclass(frozen=True)
class RecurrenceState:
    """A consecutive pair of generating polynomials, ready to be advanced."""

    r_current: int
    p_prev: BivarPoly  # polynomial for r_current - 1 darts
    p_curr: BivarPoly  # polynomial for r_current darts


def initial_state() -> RecurrenceState:
    """State holding the base cases, one and two darts."""
    return RecurrenceState(2, _P1, _P2)


def step(state: RecurrenceState) -> RecurrenceState:
    """Advance one dart: produce the polynomial for r_current + 1 darts."""
    r = state.r_current - 1  # recurrence index, >= 1
    if r < 1:
        raise ValueError(f"state at r_current={state.r_current} cannot be advanced")
    rhs = (2 * r + 3) * (M + N) * state.p_curr + (
        r * ((r + 1) ** 2)
    ) * state.p_prev - r * ((M - N) ** 2) * state.p_prev
    return RecurrenceState(state.r_current + 1, state.p_curr, rhs.exact_div(r + 3))


def stream(r_max: int):
    """Yield (r, polynomial) for r = 1..r_max in one recurrence pass."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    yield 1, _P1
    if r_max == 1:
        return
    state = initial_state()
    yield 2, _P2
    while state.r_current < r_max:
        state = step(state)
        yield state.r_current, state.p_curr


def one_face_poly(r: int) -> BivarPoly:
    """Generating polynomial for r darts, built by running the recurrence."""
    for _, poly in stream(r):
        pass
    return poly


# certificate -------------------------------------------------------------


def certificate_bracket(r: int, k: int) -> BivarPoly:
    """The bracketed cofactor of G(r, k), as a polynomial in m and n.

    This is the one long expression in the certificate, degree three in
    (k, r) and degree one in each of m and n; it is transcribed exactly once
    here and pinned by spot values in the tests, since a silent typo in it
    would invalidate every certificate check.
    """
    const = (
        k * k * r
        - 3 * k * r * r
        + 2 * r ** 3
        + k * k
        - 7 * k * r
        + 7 * r * r
        - 4 * k
        + 8 * r
        + 3
    )
    linear = k - r - 1  # shared coefficient of m and of n
    return BivarPoly(
        {(0, 0): const, (1, 1): -(r + 3), (1, 0): linear, (0, 1): linear}
    )


def _rf_bivar(k: int, length: int, in_m: bool) -> BivarPoly:
    """Rising product of the given length starting at (m or n) - k, as a BivarPoly."""
    coeffs = rising_ratio(k, length).coeffs
    if in_m:
        return BivarPoly({(i, 0): c for i, c in enumerate(coeffs) if c})
    return BivarPoly({(0, i): c for i, c in enumerate(coeffs) if c})


def _f_cleared(s: int, k: int) -> BivarPoly:
    """s! * F(s, k): the closed-form summand with its denominator cleared."""
    if k < 0 or k >= s:
        return BivarPoly.zero()
    sign = -1 if k & 1 else 1
    return (sign * comb(s - 1, k)) * (_rf_bivar(k, s, True) * _rf_bivar(k, s, False))


def _g_cleared(r: int, k: int) -> BivarPoly:
    """(r+2)! * G(r, k): the certificate companion with its denominator cleared.

    The factorial quotients in G expand to rising products of r+1 consecutive
    factors, so both sides of the certificate stay pole-free polynomials.
    """
    if k < 1 or k > r + 1:
        return BivarPoly.zero()
    sign = -1 if k & 1 else 1
    prod = _rf_bivar(k, r + 1, True) * _rf_bivar(k, r + 1, False)
    return (sign * comb(r, k - 1)) * prod * certificate_bracket(r, k)


def verify_certificate(r: int, k: int) -> bool:
    """Check the certificate identity at (r, k) as exact polynomial equality.

    Both sides are multiplied by (r+2)! so the comparison happens over
    integer-coefficient polynomials.  Outside the supports of F and G both
    sides are identically zero and the check is trivially true.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    lhs = (
        (r + 3) * _f_cleared(r + 2, k)
        - ((2 * r + 3) * (r + 2)) * (M + N) * _f_cleared(r + 1, k)
        + (r * (r + 1) * (r + 2)) * ((M - N) ** 2 - BivarPoly.constant((r + 1) ** 2)) * _f_cleared(r, k)
    )
    rhs = _g_cleared(r, k + 1) - _g_cleared(r, k)
    return lhs == rhs


def telescoping_check(r: int) -> bool:
    """True iff the certificate differences sum to the zero polynomial.

    Summing G(r, k+1) - G(r, k) over k = 0..r+1 must cancel term by term,
    because G vanishes at both ends of the range.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    total = BivarPoly.zero()
    for k in range(0, r + 2):
        total = total + (_g_cleared(r, k + 1) - _g_cleared(r, k))
    return not total
