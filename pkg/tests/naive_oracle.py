"""Literal brute-force reimplementation of the coloring definitions.

Deliberately independent of the package internals: full enumeration over all
t^n color sequences, with the validity rules spelled out from scratch.  Only
usable for small n, which is exactly its job.
"""

from itertools import product


def consecutive_block(values) -> bool:
    """True for a nonempty set of integers with no holes."""
    vs = set(values)
    return bool(vs) and max(vs) - min(vs) + 1 == len(vs)


def vertex_ok(a: int, b: int, t: int, mode: str) -> bool:
    if a == b:
        return False
    pair_ok = consecutive_block({a, b})
    if mode == "interval":
        return pair_ok
    complement = set(range(1, t + 1)) - {a, b}
    return pair_ok or (consecutive_block(complement) and len(complement) == t - 2)


def valid(colors, t: int, mode: str) -> bool:
    n = len(colors)
    if set(colors) != set(range(1, t + 1)):
        return False
    return all(vertex_ok(colors[i - 1], colors[i], t, mode) for i in range(n))


def enumerate_naive(n: int, t: int, mode: str = "cyclic"):
    """All valid color sequences, in lexicographic order."""
    return [seq for seq in product(range(1, t + 1), repeat=n) if valid(seq, t, mode)]


def count_naive(n: int, t: int, mode: str = "cyclic") -> int:
    return len(enumerate_naive(n, t, mode))
