"""Checks deciding whether a coloring is proper, interval, or cyclically interval.

A vertex of a cycle sees exactly two edge colors.  In interval mode the two
colors must be consecutive integers; in cyclic mode they may instead be the
first and last colors, so the palette is consecutive on the color circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .model import CycleColoring

__all__ = [
    "INTERVAL",
    "CYCLIC",
    "MODES",
    "NOT_PROPER",
    "NOT_INTERVAL",
    "NOT_CYCLIC_INTERVAL",
    "Violation",
    "VerificationReport",
    "vertex_palette",
    "is_proper",
    "is_surjective",
    "palette_cyclically_ok",
    "verify",
    "u_set",
]

INTERVAL = "interval"
CYCLIC = "cyclic"
MODES = (INTERVAL, CYCLIC)

NOT_PROPER = "not-proper"
NOT_INTERVAL = "not-interval"
NOT_CYCLIC_INTERVAL = "not-cyclic-interval"


class Violation(NamedTuple):
    vertex: int
    palette: tuple[int, int]
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    """Structured verdict for one coloring under one mode."""

    proper: bool
    surjective: bool
    mode_satisfied: bool
    violations: tuple[Violation, ...]
    missing_colors: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "proper": self.proper,
            "surjective": self.surjective,
            "valid": self.mode_satisfied,
            "violations": [
                {"vertex": v.vertex, "palette": list(v.palette), "reason": v.reason}
                for v in self.violations
            ],
            "missing_colors": sorted(self.missing_colors),
        }


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def vertex_palette(c: CycleColoring, i: int) -> tuple[int, int]:
    """The two colors incident to vertex i, as (edge i-1, edge i)."""
    if not 1 <= i <= c.n:
        raise ValueError(f"vertex index must lie in [1, {c.n}], got {i}")
    return (c.colors[(i - 2) % c.n], c.colors[i - 1])


def is_proper(c: CycleColoring) -> bool:
    """True when no two adjacent edges share a color."""
    colors = c.colors
    return all(colors[i - 1] != colors[i] for i in range(c.n))


def is_surjective(c: CycleColoring) -> bool:
    """True when every color 1..t appears on some edge."""
    return len(set(c.colors)) == c.t


def _complement_is_interval(a: int, b: int, t: int) -> bool:
    rest = [x for x in range(1, t + 1) if x != a and x != b]
    return bool(rest) and rest[-1] - rest[0] + 1 == len(rest)


def palette_cyclically_ok(pair: tuple[int, int], t: int) -> bool:
    """True when two distinct colors are consecutive, or are exactly 1 and t.

    The fast test is the degree-2 reduction of the defining rule (the pair,
    or the rest of [1, t] after removing it, is a block of consecutive
    integers); the assertion keeps the two in lockstep.
    """
    a, b = pair
    if a == b:
        raise ValueError("palette with a repeated color is never admissible")
    ok = abs(a - b) == 1 or (a == 1 and b == t) or (a == t and b == 1)
    assert ok == (abs(a - b) == 1 or _complement_is_interval(a, b, t))
    return ok


def verify(c: CycleColoring, mode: str = CYCLIC) -> VerificationReport:
    """Full verdict: properness, color coverage, and the per-vertex palette rule.

    Violations list every failing vertex in ascending order; surjectivity
    failures surface through ``missing_colors`` rather than per-vertex entries.
    """
    _check_mode(mode)
    n, t, colors = c.n, c.t, c.colors
    violations: list[Violation] = []
    proper = True
    interval_mode = mode == INTERVAL
    prev = colors[-1]
    for i in range(n):
        cur = colors[i]
        if cur == prev:
            proper = False
            violations.append(Violation(i + 1, (prev, cur), NOT_PROPER))
        elif interval_mode:
            if abs(cur - prev) != 1:
                violations.append(Violation(i + 1, (prev, cur), NOT_INTERVAL))
        elif abs(cur - prev) != 1 and not (
            (prev == 1 and cur == t) or (prev == t and cur == 1)
        ):
            violations.append(Violation(i + 1, (prev, cur), NOT_CYCLIC_INTERVAL))
        prev = cur
    missing = frozenset(range(1, t + 1)) - frozenset(colors)
    return VerificationReport(
        proper=proper,
        surjective=not missing,
        mode_satisfied=proper and not missing and not violations,
        violations=tuple(violations),
        missing_colors=missing,
    )


def u_set(c: CycleColoring) -> set[int]:
    """1-based indices of edges colored strictly between 1 and t."""
    return {i + 1 for i, x in enumerate(c.colors) if 1 < x < c.t}
