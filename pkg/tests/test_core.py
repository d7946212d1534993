import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnm.core import (
    BoxCoord,
    BrillNoetherParams,
    DomainError,
    RamificationSequence,
    SkewDiagram,
    ValidationError,
    box_distance,
    build_diagram,
    compute_rho,
    corner_distance,
    diagram_stats,
    dual_sequence,
    make_params,
    max_pairwise_distance,
    rectangle_params,
)
from bnm.instances import rho_zero_instances


@st.composite
def sequences(draw, r=None, d=None):
    r = draw(st.integers(0, 4)) if r is None else r
    d = draw(st.integers(r, r + 8)) if d is None else d
    vals = sorted(draw(st.lists(st.integers(0, d - r), min_size=r + 1, max_size=r + 1)), reverse=True)
    return RamificationSequence(tuple(vals)), r, d


class TestRho:
    def test_example(self):
        assert compute_rho(make_params(7, 1, 6, (1, 0), (2, 0))) == 0

    def test_empty(self):
        assert compute_rho(make_params(0, 0, 0, (0,), (0,))) == 0

    def test_rectangle_with_ramification(self):
        assert compute_rho(make_params(12, 2, 12, (1, 1, 1), (1, 1, 1))) == 0

    def test_nonzero(self):
        assert compute_rho(make_params(8, 1, 6, (1, 0), (2, 0))) == -1

    @pytest.mark.parametrize(
        "args, needle",
        [
            ((7, 1, 6, (1, 0, 0), (2, 0)), "length"),
            ((7, 1, 6, (0, 1), (2, 0)), "nonincreasing"),
            ((7, 1, 6, (1, -1), (2, 0)), "last entry"),
            ((7, 1, 6, (6, 0), (2, 0)), "first entry"),
            ((3, 1, 6, (0, 0), (0, 0)), r"g-d\+r"),
            ((-1, 0, 0, (0,), (0,)), "nonnegative"),
        ],
    )
    def test_validation_names_invariant(self, args, needle):
        with pytest.raises(ValidationError, match=needle):
            make_params(*args)

    @given(st.integers(0, 12), st.integers(0, 3), st.integers(0, 6), st.data())
    def test_linear_in_each_argument(self, g, r, extra, data):
        d = r + extra
        if g - d + r < 1:
            return
        a, _, _ = data.draw(sequences(r, d))
        b, _, _ = data.draw(sequences(r, d))
        p = BrillNoetherParams(g, r, d, a, b)
        base = compute_rho(p)
        assert compute_rho(BrillNoetherParams(g + 1, r, d, a, b)) - base == 1 - (r + 1)
        if d - 1 - r >= max(a[0], b[0]) and d - 1 >= r:
            assert compute_rho(BrillNoetherParams(g, r, d - 1, a, b)) - base == -(r + 1)
        if a[0] < d - r:
            bumped = RamificationSequence((a[0] + 1,) + a.entries[1:])
            assert compute_rho(BrillNoetherParams(g, r, d, bumped, b)) - base == -1


class TestDual:
    def test_example(self):
        assert dual_sequence(RamificationSequence((2, 0)), 6, 1) == RamificationSequence((5, 3))

    def test_zero(self):
        assert dual_sequence(RamificationSequence((0, 0, 0)), 9, 2) == RamificationSequence((7, 7, 7))

    @given(sequences())
    def test_involution_preserves_validity(self, case):
        seq, r, d = case
        dual = dual_sequence(seq, d, r)
        dual.validate(r, d)
        assert dual_sequence(dual, d, r) == seq

    def test_parse_roundtrip(self):
        s = RamificationSequence.parse("3,1,0")
        assert s.entries == (3, 1, 0) and str(s) == "3,1,0"
        with pytest.raises(ValidationError):
            RamificationSequence.parse("3,x")


class TestDiagram:
    def test_example(self):
        diag = build_diagram(make_params(7, 1, 6, (1, 0), (2, 0)))
        assert diag.row_intervals == ((2, 5), (1, 3))
        assert diag.row_lengths == (4, 3) and diag.size == 7

    @pytest.mark.parametrize("s,t", [(1, 1), (2, 2), (3, 4), (4, 3), (2, 6)])
    def test_unramified_rectangle(self, s, t):
        diag = build_diagram(rectangle_params(s, t))
        assert diag.row_intervals == ((1, t),) * s

    def test_constant_shift_is_rectangle(self):
        diag = build_diagram(make_params(12, 2, 12, (1, 1, 1), (1, 1, 1)))
        assert set(diag.row_lengths) == {4} and len({iv for iv in diag.row_intervals}) == 1

    def test_rho_nonzero_rejected(self):
        with pytest.raises(DomainError):
            build_diagram(make_params(8, 1, 6, (1, 0), (2, 0)))

    def test_all_valid_small_instances(self):
        count = 0
        for p in rho_zero_instances(9):
            diag = build_diagram(p)
            starts = [a for a, _ in diag.row_intervals]
            ends = [b for _, b in diag.row_intervals]
            assert starts == sorted(starts, reverse=True)
            assert ends == sorted(ends, reverse=True)
            assert diag.size == p.g
            count += 1
        assert count > 1000

    def test_empty_rows_allowed(self):
        diag = build_diagram(make_params(0, 1, 1, (0, 0), (0, 0)))
        assert diag.size == 0 and diag.nrows == 2

    def test_outer_inner(self):
        lam, mu = build_diagram(make_params(7, 1, 6, (1, 0), (2, 0))).outer_inner()
        assert lam == [5, 3] and mu == [1, 0]


class TestDistances:
    def test_adjacent(self):
        assert box_distance(BoxCoord(1, 1), BoxCoord(1, 2)) == 1
        assert box_distance(BoxCoord(1, 1), BoxCoord(2, 1)) == 1

    def test_self(self):
        assert box_distance(BoxCoord(3, 2), BoxCoord(3, 2)) == 0

    def test_corner_formula(self):
        for p in rho_zero_instances(9):
            if p.g == 0:
                continue
            diag = build_diagram(p)
            top_end = diag.row_intervals[0][1]
            lower_left, upper_right = BoxCoord(diag.nrows, 1), BoxCoord(1, top_end)
            if lower_left in diag and upper_right in diag:
                assert box_distance(lower_left, upper_right) == corner_distance(p)

    def test_stats_rectangle(self):
        assert diagram_stats(build_diagram(rectangle_params(3, 4))) == (3, 4, 5, 5)

    def test_stats_single_box(self):
        assert diagram_stats(SkewDiagram(((1, 1),))) == (1, 1, 0, 0)

    def test_stats_example(self):
        p = make_params(7, 1, 6, (1, 0), (2, 0))
        assert diagram_stats(build_diagram(p), p) == (1, 4, 5, 5)

    def test_stats_empty(self):
        with pytest.raises(DomainError):
            diagram_stats(SkewDiagram(((1, 0),)))

    def test_s_and_t_formulas(self):
        for p in rho_zero_instances(8):
            if p.g == 0:
                continue
            st_ = diagram_stats(build_diagram(p), p)
            diag = build_diagram(p)
            if diag.row_lengths[-1] and diag.row_lengths[0]:
                assert st_.s == list(p.alpha).count(p.alpha[0])
            assert st_.t == p.alpha[p.r] + p.beta[0] + p.w

    def test_diameter_brute_force(self):
        for p in rho_zero_instances(7):
            diag = build_diagram(p)
            boxes = diag.boxes()
            if not boxes:
                continue
            brute = max(box_distance(a, b) for a in boxes for b in boxes)
            assert max_pairwise_distance(diag) == brute


def test_record_roundtrip():
    p = make_params(7, 1, 6, "1,0", "2,0")
    assert BrillNoetherParams.from_record(p.as_record()) == p
    with pytest.raises(ValidationError):
        BrillNoetherParams.from_record({"g": 1})
