import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic_chroma import (
    CYCLIC,
    INTERVAL,
    NOT_CYCLIC_INTERVAL,
    NOT_INTERVAL,
    NOT_PROPER,
    CycleColoring,
    is_proper,
    is_surjective,
    palette_cyclically_ok,
    shift_colors,
    rotate_edges,
    u_set,
    verify,
    vertex_palette,
)


def coloring(colors, t=None):
    colors = tuple(colors)
    return CycleColoring(len(colors), t if t is not None else max(colors), colors)


colorings_st = st.integers(3, 10).flatmap(
    lambda n: st.integers(1, n).flatmap(
        lambda t: st.lists(st.integers(1, t), min_size=n, max_size=n).map(
            lambda cs: CycleColoring(n, t, tuple(cs))
        )
    )
)


class TestVertexPalette:
    def test_wraparound_vertex(self):
        assert vertex_palette(coloring([1, 2, 1, 2, 3]), 1) == (3, 1)

    def test_inner_vertex(self):
        assert vertex_palette(coloring([1, 2, 1, 2, 3]), 2) == (1, 2)

    def test_last_vertex(self):
        assert vertex_palette(coloring([1, 2, 3, 4]), 4) == (3, 4)

    def test_out_of_range(self):
        c = coloring([1, 2, 3])
        with pytest.raises(ValueError):
            vertex_palette(c, 0)
        with pytest.raises(ValueError):
            vertex_palette(c, 4)


class TestIsProper:
    def test_valid(self):
        assert is_proper(coloring([1, 2, 1, 2, 3]))

    def test_repeated_adjacent(self):
        assert not is_proper(coloring([1, 1, 2]))

    def test_triangle(self):
        assert is_proper(coloring([1, 2, 3]))

    def test_single_color(self):
        assert not is_proper(coloring([1, 1, 1], t=1))


class TestIsSurjective:
    def test_missing_color(self):
        assert not is_surjective(coloring([1, 2, 1, 2], t=3))

    def test_exact(self):
        assert is_surjective(coloring([1, 2, 1, 2], t=2))

    def test_all_used(self):
        assert is_surjective(coloring([1, 2, 1, 2, 3], t=3))


class TestPaletteCyclicallyOk:
    def test_wrap_pair(self):
        assert palette_cyclically_ok((3, 1), 3)

    def test_ends_of_range(self):
        assert palette_cyclically_ok((1, 4), 4)

    def test_gap_pair(self):
        assert not palette_cyclically_ok((1, 3), 4)

    def test_repeated_color_rejected(self):
        with pytest.raises(ValueError):
            palette_cyclically_ok((2, 2), 4)

    def test_degree_two_equivalence_exhaustive(self):
        # the function must match the literal rule: the pair or its complement
        # in [1, t] is a block of consecutive integers
        for t in range(2, 51):
            full = set(range(1, t + 1))
            for a in range(1, t + 1):
                for b in range(1, t + 1):
                    if a == b:
                        continue
                    pair_block = abs(a - b) == 1
                    rest = sorted(full - {a, b})
                    rest_block = bool(rest) and rest[-1] - rest[0] + 1 == len(rest)
                    literal = pair_block or (rest_block and len(rest) == t - 2)
                    shortcut = abs(a - b) == 1 or {a, b} == {1, t}
                    assert literal == shortcut
                    assert palette_cyclically_ok((a, b), t) == literal


class TestVerify:
    def test_cyclic_valid(self):
        rep = verify(coloring([1, 2, 1, 2, 3]), CYCLIC)
        assert rep.mode_satisfied
        assert rep.proper and rep.surjective
        assert rep.violations == ()
        assert rep.missing_colors == frozenset()

    def test_interval_wrap_violation(self):
        rep = verify(coloring([1, 2, 3, 4]), INTERVAL)
        assert not rep.mode_satisfied
        assert rep.proper and rep.surjective
        assert rep.violations[0].vertex == 1
        assert set(rep.violations[0].palette) == {4, 1}
        assert rep.violations[0].reason == NOT_INTERVAL

    def test_cyclic_gap_violation(self):
        rep = verify(coloring([1, 3, 2, 4]), CYCLIC)
        assert not rep.mode_satisfied
        assert rep.violations[0].vertex == 2
        assert set(rep.violations[0].palette) == {1, 3}
        assert rep.violations[0].reason == NOT_CYCLIC_INTERVAL
        # every failing vertex is reported, ascending
        assert [v.vertex for v in rep.violations] == [2, 4]

    def test_surjectivity_failure(self):
        rep = verify(coloring([1, 2, 1, 2], t=3), CYCLIC)
        assert not rep.mode_satisfied
        assert rep.proper
        assert not rep.surjective
        assert rep.missing_colors == frozenset({3})
        assert rep.violations == ()

    def test_not_proper_reported(self):
        rep = verify(coloring([1, 1, 2]), CYCLIC)
        assert not rep.proper
        assert any(v.reason == NOT_PROPER for v in rep.violations)

    def test_single_color_never_proper(self):
        rep = verify(coloring([1, 1, 1], t=1), CYCLIC)
        assert not rep.proper and not rep.mode_satisfied

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            verify(coloring([1, 2, 3]), "wrap")

    def test_json_schema(self):
        rep = verify(coloring([1, 3, 2, 4]), CYCLIC)
        data = rep.to_json_dict()
        assert set(data) == {
            "proper",
            "surjective",
            "valid",
            "violations",
            "missing_colors",
        }
        assert data["valid"] is False
        assert data["violations"][0] == {
            "vertex": 2,
            "palette": [1, 3],
            "reason": NOT_CYCLIC_INTERVAL,
        }

    @given(colorings_st)
    def test_report_invariants(self, c):
        for mode in (INTERVAL, CYCLIC):
            rep = verify(c, mode)
            if rep.mode_satisfied:
                assert rep.proper and rep.surjective and not rep.violations
            assert bool(rep.missing_colors) == (not rep.surjective)
            assert rep.proper == is_proper(c)
            assert rep.surjective == is_surjective(c)

    @given(colorings_st)
    def test_interval_implies_cyclic(self, c):
        if verify(c, INTERVAL).mode_satisfied:
            assert verify(c, CYCLIC).mode_satisfied


class TestSymmetries:
    @given(colorings_st, st.integers(-15, 15))
    def test_shift_preserves_cyclic(self, c, delta):
        assert (
            verify(shift_colors(c, delta), CYCLIC).mode_satisfied
            == verify(c, CYCLIC).mode_satisfied
        )

    @given(colorings_st, st.integers(0, 9))
    def test_rotation_preserves_both_modes(self, c, k):
        r = rotate_edges(c, k % c.n)
        for mode in (INTERVAL, CYCLIC):
            assert verify(r, mode).mode_satisfied == verify(c, mode).mode_satisfied

    @given(colorings_st)
    def test_reversal_preserves_both_modes(self, c):
        r = CycleColoring(c.n, c.t, tuple(reversed(c.colors)))
        for mode in (INTERVAL, CYCLIC):
            assert verify(r, mode).mode_satisfied == verify(c, mode).mode_satisfied

    @given(colorings_st)
    def test_color_reflection_preserves_both_modes(self, c):
        r = CycleColoring(c.n, c.t, tuple(c.t + 1 - x for x in c.colors))
        for mode in (INTERVAL, CYCLIC):
            assert verify(r, mode).mode_satisfied == verify(c, mode).mode_satisfied

    def test_interval_mode_not_shift_invariant(self):
        # a shift can keep interval validity ...
        two = coloring([1, 2, 1, 2], t=2)
        assert verify(two, INTERVAL).mode_satisfied
        assert verify(shift_colors(two, 1), INTERVAL).mode_satisfied
        # ... but does not in general
        c = coloring([1, 2, 3, 2])
        assert verify(c, INTERVAL).mode_satisfied
        shifted = shift_colors(c, 1)
        assert shifted.colors == (2, 3, 1, 3)
        assert not verify(shifted, INTERVAL).mode_satisfied
        # cyclic validity survives the same shift
        assert verify(shifted, CYCLIC).mode_satisfied


class TestUSet:
    def test_interior_colors(self):
        assert u_set(coloring([1, 2, 1, 2, 3])) == {2, 4}

    def test_staircase(self):
        assert u_set(coloring([1, 2, 3, 4])) == {2, 3}

    def test_two_colors_empty(self):
        assert u_set(coloring([1, 2, 1, 2], t=2)) == set()
