"""Closed-form feasibility landscape for edge colorings of cycles.

For an n-edge cycle the chromatic index is 2 when n is even and 3 when n is
odd.  Cyclic-mode colorings exist exactly for:

* odd n:  every odd t in [3, n];
* even n: every t in [2, n/2+1], plus every even t up to n.

Interval-mode colorings exist only for even n, exactly for t in [2, n/2+1].
The "forbidden set" is the complement of the cyclic set inside [chi', n]:
a parity-filtered gap just below n where no coloring closes up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Parity, epsilon, parity_filter

__all__ = [
    "PROVENANCE_FORMULA",
    "PROVENANCE_SEARCH",
    "MATERIALIZE_CAP",
    "ThetaSet",
    "chi_prime",
    "forbidden_set",
    "theta_cyclic",
    "theta_interval",
    "contains",
    "bounds_cyc",
]

PROVENANCE_FORMULA = "formula"
PROVENANCE_SEARCH = "search"

# Feasible sets are materialized only up to this cycle size; use contains()
# for membership queries beyond it.
MATERIALIZE_CAP = 10**6


@dataclass(frozen=True)
class ThetaSet:
    """A finite set of feasible color counts for one cycle size."""

    n: int
    members: tuple[int, ...]
    provenance: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        if self.provenance not in (PROVENANCE_FORMULA, PROVENANCE_SEARCH):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if any(b <= a for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be strictly increasing")
        if self.members and not (2 <= self.members[0] and self.members[-1] <= self.n):
            raise ValueError(f"members must lie in [2, {self.n}]")

    def __contains__(self, t: object) -> bool:
        return t in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _check_n(n: int, least: int = 3) -> None:
    if n < least:
        raise ValueError(f"cycle size must be >= {least}, got {n}")


def _check_cap(n: int) -> None:
    if n > MATERIALIZE_CAP:
        raise ValueError(
            f"refusing to materialize a feasible set for n={n} "
            f"(cap {MATERIALIZE_CAP}); use contains() for membership"
        )


def chi_prime(n: int) -> int:
    """Chromatic index of the n-edge cycle: 2 for even n, 3 for odd n."""
    _check_n(n)
    return 3 - epsilon(n)


def forbidden_set(n: int) -> set[int]:
    """Color counts in [chi', n] admitting no cyclic-mode coloring (n >= 5).

    Odd n: the even t in [4, n-1].  Even n: the odd t in [n/2+2+eps(n/2), n-1].
    """
    _check_n(n, 5)
    if n % 2 == 1:
        return parity_filter(4, n - 1, Parity.EVEN)
    half = n // 2
    return parity_filter(half + 2 + epsilon(half), n - 1, Parity.ODD)


def theta_cyclic(n: int) -> ThetaSet:
    """All color counts admitting a cyclic-mode coloring of the n-edge cycle."""
    _check_n(n)
    _check_cap(n)
    if n == 3:
        members: tuple[int, ...] = (3,)
    elif n == 4:
        members = (2, 3, 4)
    elif n % 2 == 1:
        members = tuple(range(3, n + 1, 2))
    else:
        half = n // 2
        upper = parity_filter(half + 3 - epsilon(half), n, Parity.EVEN)
        members = tuple(sorted(set(range(2, half + 2)) | upper))
    return ThetaSet(n, members, PROVENANCE_FORMULA)


def theta_interval(n: int) -> ThetaSet:
    """All color counts admitting an interval-mode coloring.

    [2, n/2+1] for even n; empty for odd n, since an interval coloring
    forces edge colors to alternate parity around the cycle.
    """
    _check_n(n)
    _check_cap(n)
    members = tuple(range(2, n // 2 + 2)) if n % 2 == 0 else ()
    return ThetaSet(n, members, PROVENANCE_FORMULA)


def contains(n: int, t: int) -> bool:
    """Constant-time membership test for theta_cyclic(n)."""
    _check_n(n)
    if t < chi_prime(n) or t > n:
        return False
    if (n - t) % 2 == 0:
        return True
    return n % 2 == 0 and t % 2 == 1 and 3 <= t <= n // 2 + 1


def bounds_cyc(n: int) -> tuple[int, int]:
    """Minimum and maximum feasible color counts in cyclic mode."""
    _check_n(n)
    if n <= MATERIALIZE_CAP:
        members = theta_cyclic(n).members
        return (members[0], members[-1])
    return (3 - epsilon(n), n)
