"""Deterministic witness colorings for every feasible (n, t) pair.

Two canonical patterns cover the whole feasibility region:

* zigzag-staircase, when n and t have equal parity: alternate 1,2 for the
  first n-t edges, then ascend 1..t; both the seam and the wrap land on an
  admissible palette.
* tent, when n is even and t is odd: ascend 1..t, descend t-1..2, then
  alternate 1,2; every adjacent pair differs by exactly one, so the result
  is interval-valid as well.
"""

from __future__ import annotations

from .characterization import chi_prime, contains, forbidden_set
from .model import CycleColoring

__all__ = [
    "REASON_RANGE",
    "REASON_FORBIDDEN",
    "REASON_PATTERN",
    "Infeasible",
    "zigzag_staircase",
    "tent",
    "construct",
]

REASON_RANGE = "range"
REASON_FORBIDDEN = "forbidden"
REASON_PATTERN = "pattern"


class Infeasible(Exception):
    """No coloring exists, or no pattern applies, for the requested (n, t).

    ``reason`` names the gate that failed: "range" when t falls outside
    [chi', n], "forbidden" when t sits in the parity gap, "pattern" when a
    specific builder was asked for parameters outside its shape.
    """

    def __init__(self, n: int, t: int, reason: str, message: str) -> None:
        super().__init__(message)
        self.n = n
        self.t = t
        self.reason = reason
        self.message = message


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"cycle size must be >= 3, got {n}")


def zigzag_staircase(n: int, t: int) -> CycleColoring:
    """Alternating (1,2) prefix of length n-t, then the ascent 1..t.

    Requires chi'(n) <= t <= n with n-t even.
    """
    _check_n(n)
    chi = chi_prime(n)
    if not (chi <= t <= n) or (n - t) % 2 != 0:
        raise Infeasible(
            n,
            t,
            REASON_PATTERN,
            f"zigzag-staircase needs {chi} <= t <= {n} with n-t even, got t={t}",
        )
    pad = (n - t) // 2
    return CycleColoring(n, t, (1, 2) * pad + tuple(range(1, t + 1)))


def tent(n: int, t: int) -> CycleColoring:
    """Ascent 1..t, descent t-1..2, then alternating (1,2) padding.

    Requires even n and 2 <= t <= n/2+1; the result is interval-valid.
    """
    _check_n(n)
    if n % 2 != 0 or not (2 <= t <= n // 2 + 1):
        raise Infeasible(
            n,
            t,
            REASON_PATTERN,
            f"tent needs even n and 2 <= t <= n/2+1, got n={n}, t={t}",
        )
    pad = (n - (2 * t - 2)) // 2
    ascent = tuple(range(1, t + 1))
    descent = tuple(range(t - 1, 1, -1))
    return CycleColoring(n, t, ascent + descent + (1, 2) * pad)


def construct(n: int, t: int) -> CycleColoring:
    """Canonical witness for (n, t); raises Infeasible outside theta_cyclic(n).

    Equal parity of n and t selects the zigzag-staircase (this covers every
    even t for even n), otherwise the tent.  Pure and deterministic: the same
    input always yields the identical coloring.
    """
    _check_n(n)
    if not contains(n, t):
        chi = chi_prime(n)
        if t < chi or t > n:
            raise Infeasible(
                n, t, REASON_RANGE, f"t={t} outside [{chi},{n}] for C({n})"
            )
        gap = ",".join(str(x) for x in sorted(forbidden_set(n)))
        raise Infeasible(
            n, t, REASON_FORBIDDEN, f"t={t} in forbidden set {{{gap}}} of C({n})"
        )
    if (n - t) % 2 == 0:
        return zigzag_staircase(n, t)
    return tent(n, t)
