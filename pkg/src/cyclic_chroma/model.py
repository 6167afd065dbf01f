"""Domain types and index conventions for edge colorings of simple cycles.

A cycle with n edges uses 1-based circular indexing: edge i joins vertices
i and i+1 (vertex n+1 wraps to vertex 1), so vertex i is incident to edges
i-1 and i (edge 0 wraps to edge n).  Colors are plain integers in [1, t].
All values are immutable and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

__all__ = [
    "Parity",
    "CycleColoring",
    "epsilon",
    "sgn_nat",
    "parity_filter",
    "rotate_edges",
    "shift_colors",
]


class Parity(IntEnum):
    """Parity selector: EVEN keeps even integers, ODD keeps odd ones."""

    EVEN = 0
    ODD = 1


_RECORD_FIELDS = {"n", "t", "colors"}


def _require_int(value: object, label: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{label} must be an integer, got {value!r}")


@dataclass(frozen=True)
class CycleColoring:
    """Colors 1..t assigned to the n edges of a simple cycle.

    ``colors[i]`` is the color of edge i+1.
    """

    n: int
    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.n < 3:
            raise ValueError(f"a simple cycle needs n >= 3 edges, got n={self.n}")
        if self.t < 1:
            raise ValueError(f"color count must be >= 1, got t={self.t}")
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} edge colors, got {len(self.colors)}")
        if min(self.colors) < 1 or max(self.colors) > self.t:
            raise ValueError(f"edge colors must lie in [1, {self.t}]")

    def edge_color(self, i: int) -> int:
        """Color of edge i, 1-based and circular (edge 0 means edge n)."""
        return self.colors[(i - 1) % self.n]

    def to_record(self) -> dict:
        """Canonical interchange record, ready for JSON encoding."""
        return {"n": self.n, "t": self.t, "colors": list(self.colors)}

    @classmethod
    def from_record(cls, data: object) -> CycleColoring:
        """Parse the canonical record; unknown or missing fields are rejected."""
        if not isinstance(data, dict):
            raise ValueError("coloring record must be a JSON object")
        unknown = set(data) - _RECORD_FIELDS
        if unknown:
            raise ValueError(f"unknown fields in coloring record: {sorted(unknown)}")
        missing = _RECORD_FIELDS - set(data)
        if missing:
            raise ValueError(f"coloring record missing fields: {sorted(missing)}")
        n, t, colors = data["n"], data["t"], data["colors"]
        _require_int(n, "'n'")
        _require_int(t, "'t'")
        if not isinstance(colors, (list, tuple)):
            raise ValueError("'colors' must be an array of integers")
        for x in colors:
            _require_int(x, "'colors' entry")
        return cls(n, t, tuple(colors))


def epsilon(k: int) -> int:
    """1 if k is even, 0 if k is odd (defined for k >= 1)."""
    if k < 1:
        raise ValueError(f"epsilon is defined for k >= 1, got {k}")
    return 1 + k // 2 - (k + 1) // 2


def sgn_nat(k: int) -> int:
    """0 when k is 0, otherwise 1."""
    return 0 if k == 0 else 1


def parity_filter(lo: int, hi: int, p: Parity) -> set[int]:
    """Integers in [lo, hi] with parity p; empty when lo > hi."""
    return {x for x in range(lo, hi + 1) if x % 2 == p}


def rotate_edges(c: CycleColoring, offset: int) -> CycleColoring:
    """Relabel edges so that the new edge 1 is the old edge offset+1."""
    if not 0 <= offset < c.n:
        raise ValueError(f"rotation offset must lie in [0, {c.n - 1}], got {offset}")
    if offset == 0:
        return c
    return CycleColoring(c.n, c.t, c.colors[offset:] + c.colors[:offset])


def shift_colors(c: CycleColoring, delta: int) -> CycleColoring:
    """Advance every color by delta around the color circle 1..t."""
    d = delta % c.t
    if d == 0:
        return c
    return CycleColoring(c.n, c.t, tuple((x - 1 + d) % c.t + 1 for x in c.colors))
