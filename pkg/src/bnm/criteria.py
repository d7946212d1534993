"""Checkers for the sufficient conditions and special constructions of the monodromy results.

Everything here is integer arithmetic over the parameters, plus the
few-mover element, which is built on an enumerated tableau set.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .core import BrillNoetherParams, DomainError, build_diagram, compute_rho, diagram_stats
from .permgroup import Permutation, generator_pi, moved_count, parity
from .tableaux import TableauSet

INTERPRETATIONS = ("corrected", "literal")
DEFAULT_INTERPRETATION = "corrected"


class BoundViolation(AssertionError):
    """The few-mover element moves more than a quarter of the tableaux (or none)."""


@dataclass
class ConditionDetail:
    id: str
    lhs: int
    rhs: int | None  # None: the min ranges over nothing
    relation: str
    passed: bool

    def to_record(self) -> dict:
        return asdict(self)


@dataclass
class DTResult:
    passed: bool
    interpretation: str
    vacuous: bool
    details: list[ConditionDetail] = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def to_record(self) -> dict:
        return {
            "passed": self.passed,
            "interpretation": self.interpretation,
            "vacuous": self.vacuous,
            "conditions": [c.to_record() for c in self.details],
        }


def _require_rho_zero(params: BrillNoetherParams) -> None:
    rho = compute_rho(params)
    if rho != 0:
        raise DomainError(f"rho = {rho} != 0 for {params}")


def _lt(cid: str, lhs: int, rhs: int | None) -> ConditionDetail:
    return ConditionDetail(cid, lhs, rhs, "<", rhs is None or lhs < rhs)


def check_dt_conditions(params: BrillNoetherParams, interpretation: str = DEFAULT_INTERPRETATION) -> DTResult:
    """The four sufficient conditions for double transitivity.

    ``interpretation`` selects how the index of condition 3 is read:
    ``corrected`` uses ``alpha[r-j-1]``; ``literal`` uses ``alpha[r-i-j-1]``
    and drops terms whose index is negative.  For ``r <= 1`` the result is
    vacuously true (the details are still reported).
    """
    if interpretation not in INTERPRETATIONS:
        raise DomainError(f"unknown interpretation {interpretation!r}")
    _require_rho_zero(params)
    g, r, d = params.g, params.r, params.d
    a, b = params.alpha, params.beta
    details: list[ConditionDetail] = []

    if r >= 1:
        rhs1 = min(a[r - j - 1] + b[j] for j in range(r)) + g - d
        details.append(_lt("1", max(a[0] - a[r], 1), rhs1))
    details.append(_lt("2", sum(x - a[r] for x in a), a[r] + g - d + r + b[r]))

    for i in range(r):
        terms = []
        for j in range(i, r):
            k = r - j - 1 if interpretation == "corrected" else r - i - j - 1
            if k >= 0:
                terms.append(a[k] + b[j])
        details.append(_lt(f"3[i={i}]", a[r - i] + b[i] - 1, min(terms) if terms else None))

    if r >= 1:
        ref = a[r - 1] + b[1]
        for i in range(1, r):
            lhs = a[r - i] + b[i]
            details.append(
                ConditionDetail(f"4[i={i}]", lhs, ref, "= and >=", lhs == ref and ref >= a[r] + b[0])
            )

    vacuous = r <= 1
    passed = vacuous or all(c.passed for c in details)
    return DTResult(passed, interpretation, vacuous, details)


def check_alter_hypotheses(params: BrillNoetherParams, interpretation: str = DEFAULT_INTERPRETATION) -> bool:
    """``r >= 2``, ``alpha_r + beta_r + g - d + r > r + 1`` and the double transitivity conditions."""
    _require_rho_zero(params)
    r = params.r
    if r < 2:
        return False
    if params.alpha[r] + params.beta[r] + params.w <= r + 1:
        return False
    return check_dt_conditions(params, interpretation).passed


@dataclass
class MoveFew:
    t: int
    a: int
    perm: Permutation
    moved: int
    bound: int
    degree: int

    @property
    def fraction(self) -> float:
        return self.moved / self.degree

    def to_record(self) -> dict:
        return {
            "t": self.t,
            "a": self.a,
            "moved": self.moved,
            "bound": self.bound,
            "fraction": round(self.fraction, 6),
            "parity": parity(self.perm),
        }


def movefew_indices(params: BrillNoetherParams) -> tuple[int, int]:
    """``(t, a)`` of the few-mover element: ``(s+t-2, L)`` for constant alpha, else ``(s+t-1, L)``."""
    stats = diagram_stats(build_diagram(params), params)
    const = len(set(params.alpha)) == 1
    return stats.s + stats.t - (2 if const else 1), stats.L


def movefew_element(
    params: BrillNoetherParams, tabs: TableauSet, interpretation: str = DEFAULT_INTERPRETATION
) -> MoveFew:
    if not check_alter_hypotheses(params, interpretation):
        raise DomainError(f"hypotheses for the few-mover element fail for {params}")
    t, a = movefew_indices(params)
    perm = generator_pi(t, a, tabs)
    n = len(tabs)
    moved = moved_count(perm)
    bound = n // 4
    result = MoveFew(t, a, perm, moved, bound, n)
    if not 0 < moved <= bound:
        raise BoundViolation(
            f"discrepancy: pi_{{{t},{a}}} moves {moved} of {n} tableaux; expected 0 < moved <= {bound}"
        )
    return result


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("catalan(n) needs n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def catalan_is_odd(n: int) -> bool:
    """Parity of ``C_n``, decided directly and by ``n + 1`` being a power of two."""
    direct = catalan(n) % 2 == 1
    by_power = (n + 1) & n == 0
    assert direct == by_power, n
    return direct


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


@dataclass
class CatalanParity:
    applies: bool
    L_prime: int
    predicted_odd_pairs: int | None

    def to_record(self) -> dict:
        return asdict(self)


def check_catalan_parity(params: BrillNoetherParams) -> CatalanParity:
    """Catalan parity criterion for ``r = 2`` with constant alpha and beta."""
    _require_rho_zero(params)
    a, b = params.alpha, params.beta
    lp = a[0] + b[0] + params.g - params.d + params.r
    applies = (
        params.r == 2
        and len(set(a)) == 1
        and len(set(b)) == 1
        and _is_power_of_two(lp)
        and lp > 2
    )
    pairs = (lp - 1) * catalan(lp - 1) if applies else None
    return CatalanParity(applies, lp, pairs)
