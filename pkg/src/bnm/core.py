"""Brill-Noether parameters, ramification sequences and the skew diagram.

Coordinates: rows are numbered from 1 at the top, columns from 1 at the
leftmost box of the bottom row.  Row ``i`` of the diagram holds the columns
``start_i .. end_i`` with

    start_i = alpha_0 - alpha_{r+1-i} + 1
    end_i   = alpha_0 + w + beta_{i-1},      w = g - d + r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence


class ValidationError(ValueError):
    """Malformed parameters (sequence shape, ordering or bounds)."""


class DomainError(ValueError):
    """Well-formed input outside the domain of an operation."""


@dataclass(frozen=True)
class RamificationSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def parse(cls, text: str) -> RamificationSequence:
        """Parse the comma separated form, e.g. ``"3,1,0"``."""
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise ValidationError(f"cannot parse ramification sequence {text!r}") from None

    def __str__(self):
        return ",".join(map(str, self.entries))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def validate(self, r: int, d: int, name: str = "sequence") -> None:
        e = self.entries
        if len(e) != r + 1:
            raise ValidationError(f"{name}: length {len(e)} != r+1 = {r + 1}")
        if any(e[i] < e[i + 1] for i in range(r)):
            raise ValidationError(f"{name}: {self} is not nonincreasing")
        if e[-1] < 0:
            raise ValidationError(f"{name}: last entry {e[-1]} < 0")
        if e[0] > d - r:
            raise ValidationError(f"{name}: first entry {e[0]} > d-r = {d - r}")


def dual_sequence(seq: RamificationSequence, d: int, r: int) -> RamificationSequence:
    """Entry ``i`` of the dual is ``d - r - seq[r - i]``."""
    seq.validate(r, d)
    return RamificationSequence(tuple(d - r - seq[r - i] for i in range(r + 1)))


def _as_sequence(value) -> RamificationSequence:
    if isinstance(value, RamificationSequence):
        return value
    if isinstance(value, str):
        return RamificationSequence.parse(value)
    return RamificationSequence(tuple(value))


@dataclass(frozen=True)
class BrillNoetherParams:
    g: int
    r: int
    d: int
    alpha: RamificationSequence
    beta: RamificationSequence

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_sequence(self.alpha))
        object.__setattr__(self, "beta", _as_sequence(self.beta))
        self.validate()

    def validate(self) -> None:
        g, r, d = self.g, self.r, self.d
        for name, v in (("g", g), ("r", r), ("d", d)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"{name} must be an integer, got {v!r}")
            if v < 0:
                raise ValidationError(f"{name} must be nonnegative, got {v}")
        if g - d + r < 0:
            raise ValidationError(f"g-d+r = {g - d + r} < 0")
        self.alpha.validate(r, d, "alpha")
        self.beta.validate(r, d, "beta")

    @property
    def w(self) -> int:
        """Width of the central rectangle, ``g - d + r``."""
        return self.g - self.d + self.r

    def as_record(self) -> dict:
        return {
            "g": self.g,
            "r": self.r,
            "d": self.d,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
        }

    @classmethod
    def from_record(cls, rec: dict) -> BrillNoetherParams:
        try:
            return cls(int(rec["g"]), int(rec["r"]), int(rec["d"]), rec["alpha"], rec["beta"])
        except KeyError as exc:
            raise ValidationError(f"missing parameter {exc.args[0]!r}") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(str(exc)) from None

    def __str__(self):
        return f"(g={self.g}, r={self.r}, d={self.d}, alpha=({self.alpha}), beta=({self.beta}))"


def compute_rho(params: BrillNoetherParams) -> int:
    g, r, d = params.g, params.r, params.d
    return g - (r + 1) * (g - d + r) - params.alpha.weight - params.beta.weight


@dataclass(frozen=True, order=True)
class BoxCoord:
    row: int
    col: int


def box_distance(a: BoxCoord, b: BoxCoord) -> int:
    return abs(a.row - b.row) + abs(a.col - b.col)


@dataclass(frozen=True)
class SkewDiagram:
    """Per-row column intervals, top row first.  Empty rows have ``end < start``."""

    row_intervals: tuple[tuple[int, int], ...]
    w: int = 0

    def __post_init__(self):
        ivs = tuple((int(a), int(b)) for a, b in self.row_intervals)
        object.__setattr__(self, "row_intervals", ivs)
        starts = [a for a, _ in ivs]
        ends = [b for _, b in ivs]
        assert all(s >= 1 for s in starts), ivs
        assert all(b >= a - 1 for a, b in ivs), ivs
        assert all(starts[i] >= starts[i + 1] for i in range(len(ivs) - 1)), ivs
        assert all(ends[i] >= ends[i + 1] for i in range(len(ivs) - 1)), ivs

    @property
    def nrows(self) -> int:
        return len(self.row_intervals)

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.row_intervals)

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    def boxes(self) -> list[BoxCoord]:
        """Boxes in row-major order (top to bottom, left to right)."""
        return [
            BoxCoord(i, c)
            for i, (a, b) in enumerate(self.row_intervals, start=1)
            for c in range(a, b + 1)
        ]

    def column_major(self) -> list[BoxCoord]:
        """Boxes in reading order: columns left to right, top to bottom inside each."""
        return sorted(self.boxes(), key=lambda bx: (bx.col, bx.row))

    def __contains__(self, box: BoxCoord) -> bool:
        if not 1 <= box.row <= self.nrows:
            return False
        a, b = self.row_intervals[box.row - 1]
        return a <= box.col <= b

    def outer_inner(self) -> tuple[list[int], list[int]]:
        """Outer/inner partitions ``lambda / mu`` describing the same skew shape.

        Columns are shifted so the inner shape is a partition anchored at
        column 1; empty rows are kept (they contribute equal parts).
        """
        lam = [b for _, b in self.row_intervals]
        mu = [a - 1 for a, _ in self.row_intervals]
        return lam, mu


def build_diagram(params: BrillNoetherParams) -> SkewDiagram:
    rho = compute_rho(params)
    if rho != 0:
        raise DomainError(f"rho = {rho} != 0 for {params}")
    r, w = params.r, params.w
    a, b = params.alpha, params.beta
    rows = tuple(
        (a[0] - a[r + 1 - i] + 1, a[0] + w + b[i - 1]) for i in range(1, r + 2)
    )
    diag = SkewDiagram(rows, w)
    assert diag.size == params.g, (diag, params)
    return diag


class DiagramStats(NamedTuple):
    s: int
    t: int
    L: int
    d_max: int


def corner_distance(params: BrillNoetherParams) -> int:
    """Lower-left to upper-right corner distance, ``alpha_0+beta_0+g-d+2r-1``."""
    return params.alpha[0] + params.beta[0] + params.g - params.d + 2 * params.r - 1


def max_pairwise_distance(diag: SkewDiagram) -> int:
    # Extremes of row+col and row-col suffice for the Manhattan diameter.
    boxes = diag.boxes()
    plus = [bx.row + bx.col for bx in boxes]
    minus = [bx.row - bx.col for bx in boxes]
    return max(max(plus) - min(plus), max(minus) - min(minus))


def diagram_stats(diag: SkewDiagram, params: BrillNoetherParams | None = None) -> DiagramStats:
    """First-column height, first-row length, corner distance and diameter.

    ``L`` is measured between the first box of the bottom row and the last
    box of the top row; when ``params`` is given the closed formula is
    checked against that scan.
    """
    if diag.size == 0:
        raise DomainError("empty diagram has no statistics")
    s = sum(1 for a, b in diag.row_intervals if a <= 1 <= b)
    t = diag.row_lengths[0]
    lower_left = BoxCoord(diag.nrows, 1)
    upper_right = BoxCoord(1, diag.row_intervals[0][1])
    if lower_left in diag and upper_right in diag:
        L = box_distance(lower_left, upper_right)
        if params is not None:
            assert L == corner_distance(params), (L, corner_distance(params))
    elif params is not None:
        L = corner_distance(params)
    else:
        L = max_pairwise_distance(diag)
    return DiagramStats(s=s, t=t, L=L, d_max=max_pairwise_distance(diag))


def rectangle_params(s: int, t: int) -> BrillNoetherParams:
    """Unramified parameters whose diagram is the straight ``s x t`` rectangle."""
    r = s - 1
    g = s * t
    d = g - t + r
    return BrillNoetherParams(g, r, d, (0,) * s, (0,) * s)


def make_params(g: int, r: int, d: int, alpha: Sequence[int] | str, beta: Sequence[int] | str) -> BrillNoetherParams:
    return BrillNoetherParams(g, r, d, _as_sequence(alpha), _as_sequence(beta))
