"""Generation of valid rho = 0 parameter sets, and the fixed sweep used by the test suite."""

from __future__ import annotations

import random
from typing import Iterator

from .core import BrillNoetherParams, build_diagram, make_params
from .tableaux import count_oracle


def _nonincreasing(length: int, top: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for x in range(top, -1, -1):
        for rest in _nonincreasing(length - 1, x):
            yield (x,) + rest


def rho_zero_instances(max_g: int, max_r: int = 3) -> Iterator[BrillNoetherParams]:
    """Every valid parameter set with ``rho = 0``, ``g <= max_g`` and ``r <= max_r``.

    Deterministic order: by g, r, d, then alpha and beta descending.
    """
    for g in range(max_g + 1):
        for r in range(max_r + 1):
            for d in range(r, g + r + 1):
                w = g - d + r
                budget = g - (r + 1) * w
                if budget < 0:
                    continue
                for a in _nonincreasing(r + 1, min(d - r, budget)):
                    rest = budget - sum(a)
                    for b in _nonincreasing(r + 1, min(d - r, rest)):
                        if sum(b) == rest:
                            yield make_params(g, r, d, a, b)


# Instances that appear as worked examples; always part of the sweep.
NAMED_INSTANCES = (
    (7, 1, 6, (1, 0), (2, 0)),
    (8, 1, 5, (0, 0), (0, 0)),
    (4, 1, 3, (0, 0), (0, 0)),
    (12, 2, 12, (1, 1, 1), (1, 1, 1)),
)


def sweep_instances(
    *,
    full_g: int = 6,
    max_g: int = 12,
    sample: int = 60,
    max_tableaux: int = 1000,
    seed: int = 20240,
) -> list[BrillNoetherParams]:
    """The scripted sweep: all instances with ``g <= full_g`` plus a seeded
    sample of larger ones (``g <= max_g``) with at most ``max_tableaux`` tableaux."""
    small = [p for p in rho_zero_instances(full_g)]
    pool = [
        p
        for p in rho_zero_instances(max_g)
        if p.g > full_g and count_oracle(build_diagram(p)) <= max_tableaux
    ]
    rng = random.Random(seed)
    picked = rng.sample(pool, min(sample, len(pool)))
    named = [make_params(*x) for x in NAMED_INSTANCES]
    seen = set()
    out = []
    for p in small + sorted(picked, key=lambda q: (q.g, q.r, q.d, q.alpha.entries, q.beta.entries)) + named:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out
