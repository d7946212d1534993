from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import cached_property

import pytest

from bnm.core import BrillNoetherParams, SkewDiagram, build_diagram, make_params
from bnm.instances import sweep_instances
from bnm.permgroup import GeneratorSet, all_generators
from bnm.tableaux import TableauSet, enumerate_tableaux


@dataclass
class Instance:
    params: BrillNoetherParams

    @cached_property
    def diagram(self) -> SkewDiagram:
        return build_diagram(self.params)

    @cached_property
    def tabs(self) -> TableauSet:
        return enumerate_tableaux(self.diagram)

    @cached_property
    def gens(self) -> GeneratorSet:
        return all_generators(self.tabs)

    @property
    def n(self) -> int:
        return len(self.tabs)


_SWEEP: list[Instance] | None = None


def sweep() -> list[Instance]:
    """The scripted sweep, built once per session and shared by every test module."""
    global _SWEEP
    if _SWEEP is None:
        _SWEEP = [Instance(p) for p in sweep_instances()]
    return _SWEEP


_NAMED: dict[tuple, Instance] = {}


def instance(g, r, d, alpha, beta) -> Instance:
    key = (g, r, d, tuple(alpha), tuple(beta))
    if key not in _NAMED:
        _NAMED[key] = Instance(make_params(g, r, d, alpha, beta))
    return _NAMED[key]


@pytest.fixture(scope="session")
def sweep_data() -> list[Instance]:
    return sweep()


@pytest.fixture
def example35() -> Instance:
    return instance(7, 1, 6, (1, 0), (2, 0))


@pytest.fixture
def rect34() -> Instance:
    return instance(12, 2, 12, (1, 1, 1), (1, 1, 1))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.summary_lines():
            terminalreporter.write_line(line)
