"""Schubert chains and their bijection with standard tableaux.

A chain ``alpha^(1), ..., alpha^(g+1)`` starts at ``alpha``, ends at the dual
of ``beta``, and at every step keeps exactly one index fixed while raising
all others by one.  Step ``k`` fixing index ``j`` places entry ``k`` in row
``r - j + 1`` of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    BrillNoetherParams,
    DomainError,
    RamificationSequence,
    SkewDiagram,
    ValidationError,
    build_diagram,
    dual_sequence,
)
from .tableaux import StandardTableau

SchubertIndex = RamificationSequence


class InvalidChain(DomainError):
    pass


@dataclass(frozen=True)
class SchubertChain:
    steps: tuple[SchubertIndex, ...]

    def __post_init__(self):
        steps = tuple(
            s if isinstance(s, RamificationSequence) else RamificationSequence(tuple(s))
            for s in self.steps
        )
        object.__setattr__(self, "steps", steps)

    def __len__(self):
        return len(self.steps)

    def to_record(self) -> list[list[int]]:
        return [list(s) for s in self.steps]

    def sigma_notation(self) -> str:
        return ", ".join(f"sigma_{{{s}}}" for s in self.steps)

    def vanishing_views(self) -> list[tuple[int, ...]]:
        """Vanishing sequences ``a_{r-i} = alpha_i + (r - i)``, increasing order."""
        out = []
        for s in self.steps:
            r = len(s) - 1
            out.append(tuple(s[r - m] + m for m in range(r + 1)))
        return out


def _is_schubert(seq: Sequence[int], r: int, d: int) -> bool:
    try:
        RamificationSequence(tuple(seq)).validate(r, d)
    except ValidationError:
        return False
    return True


def valid_step(a: SchubertIndex, b: SchubertIndex, r: int, d: int) -> tuple[bool, int | None]:
    """Whether ``a -> b`` fixes exactly one index and raises the rest by one.

    Returns ``(True, j)`` with the fixed index ``j`` on success.
    """
    if len(a) != r + 1 or len(b) != r + 1:
        return False, None
    if not (_is_schubert(a, r, d) and _is_schubert(b, r, d)):
        return False, None
    fixed = [m for m in range(r + 1) if b[m] == a[m]]
    if len(fixed) != 1:
        return False, None
    j = fixed[0]
    if any(b[m] != a[m] + 1 for m in range(r + 1) if m != j):
        return False, None
    return True, j


def validate_chain(chain: SchubertChain, params: BrillNoetherParams) -> bool:
    """Membership in the chain set for these parameters."""
    r, d = params.r, params.d
    steps = chain.steps
    if len(steps) != params.g + 1:
        return False
    if steps[0] != params.alpha or steps[-1] != dual_sequence(params.beta, d, r):
        return False
    return all(valid_step(steps[k], steps[k + 1], r, d)[0] for k in range(params.g))


def tableau_from_chain(
    chain: SchubertChain, params: BrillNoetherParams, diagram: SkewDiagram | None = None
) -> StandardTableau:
    if diagram is None:
        diagram = build_diagram(params)
    r, d = params.r, params.d
    lengths = diagram.row_lengths
    filled = [0] * diagram.nrows
    word = []
    for k in range(len(chain.steps) - 1):
        ok, j = valid_step(chain.steps[k], chain.steps[k + 1], r, d)
        if not ok:
            raise InvalidChain(f"step {k + 1}: {chain.steps[k]} -> {chain.steps[k + 1]} is not valid")
        row = r - j + 1
        if filled[row - 1] >= lengths[row - 1]:
            raise InvalidChain(f"step {k + 1}: row {row} is already full")
        filled[row - 1] += 1
        word.append(row)
    tab = StandardTableau(diagram, tuple(word))
    assert tab.is_standard(), tab
    return tab


def chain_from_tableau(tab: StandardTableau, params: BrillNoetherParams) -> SchubertChain:
    r, d = params.r, params.d
    current = list(params.alpha)
    steps = [params.alpha]
    for row in tab.row_word:
        j = r + 1 - row
        current = [x if m == j else x + 1 for m, x in enumerate(current)]
        step = RamificationSequence(tuple(current))
        if not _is_schubert(step, r, d):
            raise InvalidChain(f"intermediate index {step} violates Schubert bounds")
        steps.append(step)
    if steps[-1] != dual_sequence(params.beta, d, r):
        raise InvalidChain(f"chain ends at {steps[-1]}, not the dual of beta")
    return SchubertChain(tuple(steps))


def iter_chains(params: BrillNoetherParams) -> Iterator[SchubertChain]:
    """Every valid chain, found by depth-first search over single steps.

    Independent of the tableau machinery; used to cross-check the bijection.
    """
    r, d, g = params.r, params.d, params.g
    target = dual_sequence(params.beta, d, r)
    path = [params.alpha]

    def rec():
        cur = path[-1]
        if len(path) == g + 1:
            if cur == target:
                yield SchubertChain(tuple(path))
            return
        for j in range(r + 1):
            nxt = RamificationSequence(tuple(x if m == j else x + 1 for m, x in enumerate(cur)))
            if not _is_schubert(nxt, r, d):
                continue
            # prune: each coordinate only grows
            if any(nxt[m] > target[m] for m in range(r + 1)):
                continue
            path.append(nxt)
            yield from rec()
            path.pop()

    yield from rec()
