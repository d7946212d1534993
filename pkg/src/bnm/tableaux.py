"""Standard tableaux of a skew diagram: representation, ordering, enumeration, counting.

A tableau is stored as its *row word*: the row (1 = top) holding each of
the entries ``1..g``.  Because entries fill every row left to right, the
row word determines the filling, and it is exactly the data a Schubert
chain records step by step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .core import BoxCoord, DomainError, SkewDiagram

DEFAULT_ENUMERATION_BOUND = 200_000


class TooLargeToEnumerate(RuntimeError):
    def __init__(self, count: int, bound: int):
        super().__init__(f"{count} tableaux exceeds the enumeration bound {bound}")
        self.count = count
        self.bound = bound


@dataclass(frozen=True)
class StandardTableau:
    diagram: SkewDiagram = field(repr=False, compare=False)
    row_word: tuple[int, ...]

    @classmethod
    def from_rows(cls, diagram: SkewDiagram, rows: Sequence[Sequence[int]]) -> StandardTableau:
        """Build from explicit row contents (top row first)."""
        if tuple(len(row) for row in rows) != diagram.row_lengths:
            raise DomainError(f"row lengths {[len(x) for x in rows]} do not fit {diagram.row_lengths}")
        n = diagram.size
        word = [0] * n
        for i, row in enumerate(rows, start=1):
            # a row word can only record rows that increase left to right
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise DomainError(f"row {i} = {list(row)} does not increase")
            for k in row:
                if not 1 <= k <= n or word[k - 1]:
                    raise DomainError(f"entries must be a permutation of 1..{n}")
                word[k - 1] = i
        return cls(diagram, tuple(word))

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.diagram.nrows)]
        for k, i in enumerate(self.row_word, start=1):
            out[i - 1].append(k)
        return tuple(tuple(x) for x in out)

    @cached_property
    def positions(self) -> tuple[BoxCoord, ...]:
        """``positions[k-1]`` is the box holding entry ``k``."""
        fill = [a for a, _ in self.diagram.row_intervals]
        out = []
        for i in self.row_word:
            out.append(BoxCoord(i, fill[i - 1]))
            fill[i - 1] += 1
        return tuple(out)

    def position(self, k: int) -> BoxCoord:
        return self.positions[k - 1]

    def entry_at(self, box: BoxCoord) -> int:
        a, _ = self.diagram.row_intervals[box.row - 1]
        return self.rows[box.row - 1][box.col - a]

    @cached_property
    def reading_word(self) -> tuple[int, ...]:
        """Entries in column-major order (columns left to right, top to bottom)."""
        return tuple(self.entry_at(bx) for bx in self.diagram.column_major())

    def is_standard(self) -> bool:
        rows = self.rows
        if tuple(map(len, rows)) != self.diagram.row_lengths:
            return False
        if sorted(self.row_word) != sorted(
            i for i, n in enumerate(self.diagram.row_lengths, start=1) for _ in range(n)
        ):
            return False
        for row in rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
        for bx in self.diagram.boxes():
            below = BoxCoord(bx.row + 1, bx.col)
            if below in self.diagram and self.entry_at(bx) >= self.entry_at(below):
                return False
        return True

    def swapped(self, t: int) -> StandardTableau:
        """The filling with entries ``t`` and ``t+1`` exchanged."""
        w = list(self.row_word)
        w[t - 1], w[t] = w[t], w[t - 1]
        return StandardTableau(self.diagram, tuple(w))

    def to_record(self) -> dict:
        return {
            "rows": [
                {"start": a, "entries": list(row)}
                for (a, _), row in zip(self.diagram.row_intervals, self.rows)
            ]
        }

    @classmethod
    def from_record(cls, diagram: SkewDiagram, rec: dict) -> StandardTableau:
        rows = rec["rows"]
        for (a, _), row in zip(diagram.row_intervals, rows):
            if row["entries"] and row["start"] != a:
                raise DomainError(f"row start {row['start']} != diagram start {a}")
        return cls.from_rows(diagram, [row["entries"] for row in rows])

    def pretty(self) -> str:
        width = len(str(self.diagram.size))
        lines = []
        for (a, _), row in zip(self.diagram.row_intervals, self.rows):
            cells = " ".join(str(k).rjust(width) for k in row)
            lines.append(" " * ((width + 1) * (a - 1)) + cells)
        return "\n".join(lines)


def canonical_compare(a: StandardTableau, b: StandardTableau) -> int:
    """-1, 0 or 1 comparing column-major reading words lexicographically."""
    if a.diagram != b.diagram:
        raise DomainError("tableaux of different shapes are not comparable")
    wa, wb = a.reading_word, b.reading_word
    return (wa > wb) - (wa < wb)


def min_tableau_S(diagram: SkewDiagram) -> StandardTableau:
    """Column-major filling."""
    return _fill_in_order(diagram, diagram.column_major())


def max_tableau_Z(diagram: SkewDiagram) -> StandardTableau:
    """Row-major filling."""
    return _fill_in_order(diagram, diagram.boxes())


def _fill_in_order(diagram: SkewDiagram, order: Iterable[BoxCoord]) -> StandardTableau:
    rows: list[list[tuple[int, int]]] = [[] for _ in range(diagram.nrows)]
    for k, bx in enumerate(order, start=1):
        rows[bx.row - 1].append((bx.col, k))
    return StandardTableau.from_rows(diagram, [[k for _, k in sorted(r)] for r in rows])


def iter_row_words(diagram: SkewDiagram):
    """All row words of standard fillings (unordered, deterministic)."""
    starts = [a for a, _ in diagram.row_intervals]
    lengths = list(diagram.row_lengths)
    nrows = len(lengths)
    n = diagram.size
    filled = [0] * nrows
    word = [0] * n

    def rec(k):
        if k == n:
            yield tuple(word)
            return
        for i in range(nrows):
            if filled[i] == lengths[i]:
                continue
            col = starts[i] + filled[i]
            if i > 0 and col >= starts[i - 1] + filled[i - 1]:
                continue
            filled[i] += 1
            word[k] = i + 1
            yield from rec(k + 1)
            filled[i] -= 1

    yield from rec(0)


class TableauSet:
    """All standard tableaux of a diagram in canonical order."""

    def __init__(self, diagram: SkewDiagram, row_words: Sequence[tuple[int, ...]]):
        self.diagram = diagram
        self.row_words = list(row_words)
        self.index = {w: i for i, w in enumerate(self.row_words)}

    def __len__(self):
        return len(self.row_words)

    def __getitem__(self, i) -> StandardTableau:
        return StandardTableau(self.diagram, self.row_words[i])

    def __iter__(self):
        return (StandardTableau(self.diagram, w) for w in self.row_words)

    def index_of(self, tab: StandardTableau) -> int:
        return self.index[tab.row_word]

    @cached_property
    def position_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """``(rows, cols)``, each of shape ``(N, g + 1)``; column ``k`` locates entry ``k``."""
        n = self.diagram.size
        words = np.array(self.row_words, dtype=np.int64).reshape(len(self), n)
        rows = np.zeros((len(self), n + 1), dtype=np.int64)
        cols = np.zeros((len(self), n + 1), dtype=np.int64)
        rows[:, 1:] = words
        fill = np.tile(
            np.array([0] + [a for a, _ in self.diagram.row_intervals], dtype=np.int64),
            (len(self), 1),
        )
        idx = np.arange(len(self))
        for k in range(1, n + 1):
            rk = words[:, k - 1]
            cols[:, k] = fill[idx, rk]
            fill[idx, rk] += 1
        return rows, cols


def _column_major_slots(diagram: SkewDiagram) -> list[int]:
    """For each row-major box index, its rank in column-major order."""
    cm = {bx: i for i, bx in enumerate(diagram.column_major())}
    return [cm[bx] for bx in diagram.boxes()]


def enumerate_tableaux(diagram: SkewDiagram, bound: int = DEFAULT_ENUMERATION_BOUND) -> TableauSet:
    expected = count_oracle(diagram)
    if expected > bound:
        raise TooLargeToEnumerate(expected, bound)
    slots = _column_major_slots(diagram)
    offsets = [0]
    for n in diagram.row_lengths:
        offsets.append(offsets[-1] + n)

    def reading_word(word):
        out = [0] * len(word)
        fill = list(offsets[:-1])
        for k, i in enumerate(word, start=1):
            out[slots[fill[i - 1]]] = k
            fill[i - 1] += 1
        return tuple(out)

    words = sorted(iter_row_words(diagram), key=reading_word)
    assert len(words) == expected, (len(words), expected)
    return TableauSet(diagram, words)


def _det(matrix: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return det


def _inv_factorial(k: int) -> Fraction:
    return Fraction(0) if k < 0 else Fraction(1, math.factorial(k))


def count_oracle(diagram: SkewDiagram) -> int:
    """Aitken's determinant ``n! det[1/(lam_i - mu_j - i + j)!]`` for the skew shape."""
    lam, mu = diagram.outer_inner()
    m = len(lam)
    n = diagram.size
    if m == 0:
        return 1
    mat = [[_inv_factorial(lam[i] - mu[j] - i + j) for j in range(m)] for i in range(m)]
    value = math.factorial(n) * _det(mat)
    assert value.denominator == 1 and value >= 0, value
    return int(value)


def count_rectangle_hook(s: int, t: int) -> int:
    """Hook-length count for the ``s x t`` rectangle."""
    value = Fraction(math.factorial(s * t))
    for i in range(s):
        value *= Fraction(math.factorial(i), math.factorial(t + i))
    assert value.denominator == 1
    return int(value)


def count_classical(g: int, r: int, d: int) -> int:
    """``g! prod_{i=0}^r i!/(g-d+r+i)!`` (the unramified count)."""
    if g - d + r < 0:
        raise DomainError(f"g-d+r = {g - d + r} < 0")
    value = Fraction(math.factorial(g))
    for i in range(r + 1):
        value *= Fraction(math.factorial(i), math.factorial(g - d + r + i))
    if value.denominator != 1:
        raise DomainError(f"N({g},{r},{d}) = {value} is not an integer")
    return int(value)
