import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnm.core import DomainError, SkewDiagram, build_diagram, make_params, rectangle_params
from bnm.instances import rho_zero_instances
from bnm.tableaux import (
    StandardTableau,
    TooLargeToEnumerate,
    canonical_compare,
    count_classical,
    count_oracle,
    count_rectangle_hook,
    enumerate_tableaux,
    iter_row_words,
    max_tableau_Z,
    min_tableau_S,
)


def brute_force_count(diag: SkewDiagram) -> int:
    """Try every bijection of boxes to 1..n; only usable for tiny shapes."""
    boxes = diag.boxes()
    where = {(b.row, b.col): i for i, b in enumerate(boxes)}
    total = 0
    for perm in itertools.permutations(range(1, len(boxes) + 1)):
        ok = True
        for (r, c), i in where.items():
            right, below = where.get((r, c + 1)), where.get((r + 1, c))
            if right is not None and perm[right] <= perm[i]:
                ok = False
                break
            if below is not None and perm[below] <= perm[i]:
                ok = False
                break
        total += ok
    return total


@st.composite
def skew_diagrams(draw, max_boxes=12):
    """Arbitrary skew shapes given by nonincreasing starts and ends."""
    nrows = draw(st.integers(1, 4))
    starts = sorted(draw(st.lists(st.integers(1, 5), min_size=nrows, max_size=nrows)), reverse=True)
    starts[-1] = 1
    ends = []
    prev = None
    for a in starts:
        lo = a - 1 if prev is None else max(a - 1, 0)
        hi = 9 if prev is None else prev
        lo = max(lo, ends[-1] if False else lo)
        e = draw(st.integers(max(a - 1, 0), max(hi, a - 1)))
        if prev is not None:
            e = min(e, prev)
        e = max(e, a - 1)
        ends.append(e)
        prev = e
    # enforce nonincreasing ends after clamping
    for i in range(1, nrows):
        ends[i] = min(ends[i], ends[i - 1])
        ends[i] = max(ends[i], starts[i] - 1)
    for i in range(1, nrows):
        if ends[i] > ends[i - 1]:
            return SkewDiagram(((1, 1),))
    diag = SkewDiagram(tuple(zip(starts, ends)))
    if diag.size > max_boxes:
        return SkewDiagram(((1, 1),))
    return diag


class TestEnumeration:
    def test_square(self):
        assert len(enumerate_tableaux(build_diagram(make_params(4, 1, 3, (0, 0), (0, 0))))) == 2

    def test_single_row(self):
        assert len(enumerate_tableaux(build_diagram(make_params(5, 0, 0, (0,), (0,))))) == 1

    def test_example(self):
        assert len(enumerate_tableaux(build_diagram(make_params(7, 1, 6, (1, 0), (2, 0))))) == 28

    def test_oracle_example_brute_force(self):
        diag = build_diagram(make_params(7, 1, 6, (1, 0), (2, 0)))
        assert brute_force_count(diag) == count_oracle(diag) == 28

    def test_bound(self):
        diag = build_diagram(rectangle_params(3, 4))
        with pytest.raises(TooLargeToEnumerate) as err:
            enumerate_tableaux(diag, bound=100)
        assert err.value.count == 462

    def test_empty_diagram(self):
        tabs = enumerate_tableaux(build_diagram(make_params(0, 0, 0, (0,), (0,))))
        assert len(tabs) == 1

    def test_deterministic(self):
        diag = build_diagram(make_params(10, 2, 10, (2, 1, 0), (1, 0, 0)))
        assert enumerate_tableaux(diag).row_words == enumerate_tableaux(diag).row_words

    @settings(max_examples=150, deadline=None)
    @given(skew_diagrams())
    def test_random_shapes_match_oracle(self, diag):
        tabs = enumerate_tableaux(diag)
        assert len(tabs) == count_oracle(diag)
        assert all(t.is_standard() for t in tabs)

    @settings(max_examples=40, deadline=None)
    @given(skew_diagrams(max_boxes=7))
    def test_random_shapes_brute_force(self, diag):
        assert brute_force_count(diag) == count_oracle(diag)

    def test_disconnected_shape(self):
        diag = SkewDiagram(((4, 5), (1, 2)))
        assert count_oracle(diag) == len(enumerate_tableaux(diag)) == 6


class TestCounting:
    def test_hook_values(self):
        assert count_rectangle_hook(3, 4) == 462
        assert count_rectangle_hook(2, 2) == 2
        assert all(count_rectangle_hook(1, t) == 1 for t in range(1, 8))

    @pytest.mark.parametrize("s,t", [(s, t) for s in range(1, 7) for t in range(1, 7)])
    def test_hook_equals_oracle(self, s, t):
        assert count_oracle(build_diagram(rectangle_params(s, t))) == count_rectangle_hook(s, t)

    def test_classical_values(self):
        assert count_classical(4, 1, 3) == 2
        assert count_classical(8, 1, 5) == 14
        assert count_classical(0, 0, 0) == 1

    def test_classical_equals_oracle_unramified(self):
        seen = 0
        for p in rho_zero_instances(12):
            if p.alpha.weight == 0 and p.beta.weight == 0:
                assert count_oracle(build_diagram(p)) == count_classical(p.g, p.r, p.d)
                seen += 1
        assert seen >= 20

    def test_classical_non_integer(self):
        # rho != 0 arguments need not give an integer
        with pytest.raises(DomainError):
            count_classical(1, 1, 1)

    def test_classical_domain(self):
        with pytest.raises(DomainError):
            count_classical(1, 0, 5)


class TestOrder:
    def test_square_S_Z(self):
        diag = build_diagram(make_params(4, 1, 3, (0, 0), (0, 0)))
        assert min_tableau_S(diag).rows == ((1, 3), (2, 4))
        assert max_tableau_Z(diag).rows == ((1, 2), (3, 4))

    def test_single_column(self):
        diag = SkewDiagram(((1, 1), (1, 1), (1, 1)))
        assert min_tableau_S(diag) == max_tableau_Z(diag)

    def test_rectangle_S_ne_Z(self):
        diag = build_diagram(rectangle_params(3, 4))
        s, z = min_tableau_S(diag), max_tableau_Z(diag)
        assert s != z and s.is_standard() and z.is_standard()

    def test_compare(self):
        tabs = enumerate_tableaux(build_diagram(make_params(7, 1, 6, (1, 0), (2, 0))))
        assert canonical_compare(tabs[3], tabs[3]) == 0
        assert canonical_compare(tabs[0], tabs[1]) == -1
        assert canonical_compare(tabs[5], tabs[1]) == 1

    def test_compare_shape_mismatch(self):
        a = min_tableau_S(SkewDiagram(((1, 2),)))
        b = min_tableau_S(SkewDiagram(((1, 1), (1, 1))))
        with pytest.raises(DomainError):
            canonical_compare(a, b)

    def test_S_first_Z_last(self):
        for p in rho_zero_instances(8):
            if p.g == 0:
                continue
            diag = build_diagram(p)
            tabs = enumerate_tableaux(diag)
            assert tabs[0] == min_tableau_S(diag)
            assert tabs[len(tabs) - 1] == max_tableau_Z(diag)


class TestTableau:
    def test_example_rows(self):
        diag = build_diagram(make_params(7, 1, 6, (1, 0), (2, 0)))
        t = StandardTableau.from_rows(diag, [[1, 3, 6, 7], [2, 4, 5]])
        assert t.row_word == (1, 2, 1, 2, 2, 1, 1)
        assert t.is_standard()
        assert t.position(3).row == 1 and t.position(3).col == 3

    def test_nonstandard_detected(self):
        diag = build_diagram(make_params(4, 1, 3, (0, 0), (0, 0)))
        with pytest.raises(DomainError):
            StandardTableau.from_rows(diag, [[1, 2], [4, 3]])
        assert not StandardTableau.from_rows(diag, [[2, 3], [1, 4]]).is_standard()

    def test_bad_rows(self):
        diag = build_diagram(make_params(4, 1, 3, (0, 0), (0, 0)))
        with pytest.raises(DomainError):
            StandardTableau.from_rows(diag, [[1, 2, 3], [4]])
        with pytest.raises(DomainError):
            StandardTableau.from_rows(diag, [[1, 1], [3, 4]])

    def test_record_roundtrip(self):
        diag = build_diagram(make_params(7, 1, 6, (1, 0), (2, 0)))
        for t in enumerate_tableaux(diag):
            rec = t.to_record()
            assert StandardTableau.from_record(diag, rec) == t
        rec = enumerate_tableaux(diag)[0].to_record()
        assert rec["rows"][0]["start"] == 2 and rec["rows"][1]["start"] == 1

    def test_pretty(self):
        diag = build_diagram(make_params(7, 1, 6, (1, 0), (2, 0)))
        text = StandardTableau.from_rows(diag, [[1, 3, 6, 7], [2, 4, 5]]).pretty()
        assert text.splitlines() == ["  1 3 6 7", "2 4 5"]

    def test_row_words_all_standard(self):
        diag = SkewDiagram(((2, 4), (1, 3), (1, 1)))
        words = list(iter_row_words(diag))
        assert len(set(words)) == len(words)
        assert all(StandardTableau(diag, w).is_standard() for w in words)
