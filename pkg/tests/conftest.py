import pytest

from cyclic_chroma import enumerate_colorings


@pytest.fixture(scope="session")
def coloring_pool():
    """All valid cyclic-mode colorings for n in [3, 9], keyed by (n, t)."""
    pools = {}
    for n in range(3, 10):
        for t in range(1, n + 1):
            found = enumerate_colorings(n, t)
            if found:
                pools[(n, t)] = found
    return pools
