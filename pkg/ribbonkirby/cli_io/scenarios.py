"""
A scenario is a directed acyclic graph of checks executed according to their dependency order.

All checks whose requirements have run are executed in parallel.  A check
whose requirements did not all pass is skipped.
"""

import time
import typing
from collections import abc
from enum import Enum

import attr
import trio
from cached_property import cached_property
from dependencies import Injector, value
from eliot import ActionType, Field, MessageType
from networkx import DiGraph, is_directed_acyclic_graph
from networkx.readwrite import json_graph

from ribbonkirby.errors import RibbonKirbyError


class CheckVerdict(Enum):
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"
    SKIPPED = "skipped"


@attr.s(auto_attribs=True, frozen=True)
class Outcome:
    """What a check function reports: the expected and the observed value."""

    expected: typing.Any
    actual: typing.Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@attr.s(auto_attribs=True, eq=False)
class Check(abc.Callable):
    """A named check; checks compare by identity so they can be graph nodes."""

    name: str
    function: typing.Callable[[], Outcome]
    requires: typing.Set["Check"] = attr.ib(factory=set)
    required_by: typing.Set["Check"] = attr.ib(factory=set)
    last: bool = False

    def include_if(self) -> bool:
        return True

    def __call__(self) -> Outcome:
        return self.function()

    def __repr__(self) -> str:
        return f"Check({self.name})"


@attr.s(auto_attribs=True, frozen=True)
class CheckResult:
    name: str
    expected: str
    actual: str
    verdict: CheckVerdict
    runtime: float = 0.0

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "verdict": self.verdict.value,
            "runtime": round(self.runtime, 3),
        }


@attr.s(auto_attribs=True, frozen=True)
class ScenarioResult:
    scenario: str
    checks: typing.Tuple[CheckResult, ...] = attr.ib(converter=tuple)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.verdict is CheckVerdict.PASSED for check in self.checks)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {
            "scenario": self.scenario,
            "verdict": "success" if self.passed else "failure",
            "runtime": round(self.runtime, 3),
            "checks": [check.to_document() for check in self.checks],
        }

    def format_text(self) -> str:
        lines = [f"{self.scenario}: {'success' if self.passed else 'failure'}"]
        for check in self.checks:
            lines.append(f"  [{check.verdict.value:>7}] {check.name}: expected {check.expected}, got {check.actual}")
        return "\n".join(lines)


def _serialize_graph(graph):
    graph = json_graph.adjacency_data(graph)
    graph["nodes"] = [{"id": repr(n["id"])} for n in graph["nodes"]]
    graph["adjacency"] = [[{"id": repr(a["id"])} for a in adj] for adj in graph["adjacency"]]
    return graph


BUILDING_DEPENDENCY_GRAPH = ActionType(
    "ribbonkirby:scenarios:building_dependency_graph",
    [Field("name", str, "The name of the scenario")],
    [
        Field("name", str, "The name of the scenario"),
        Field("graph", _serialize_graph, "The resulting graph"),
    ],
)

RUN_SCENARIO = ActionType(
    "ribbonkirby:scenarios:run",
    [Field("name", str, "The name of the scenario")],
    [Field("passed", bool, "Whether every check passed")],
)

NEXT_CHECKS = MessageType(
    "ribbonkirby:scenarios:next_checks",
    [
        Field("name", str, "The name of the scenario"),
        Field("next_checks", lambda checks: sorted(repr(c) for c in checks)),
    ],
)

RUN_CHECK = ActionType(
    "ribbonkirby:scenarios:check",
    [Field("check", repr, "The check being run")],
    [Field("verdict", lambda verdict: verdict.value, "The verdict of the check")],
)


class ScenarioState(Enum):
    INITIALIZED = "initialized"
    RUNNING = "running"
    COMPLETED = "completed"


@attr.s(auto_attribs=True, cmp=False, slots=True)
class ExecutionOrder(abc.Iterator):
    """Layers of checks; every check comes after the checks it requires."""

    _dependency_graph: DiGraph = attr.ib(default=attr.NOTHING)
    _execution_order: typing.List[typing.Set[Check]] = attr.ib(default=attr.Factory(list), init=False)
    _ready: typing.Set[Check] = attr.ib(default=attr.Factory(set), init=False)
    _remaining: DiGraph = attr.ib(default=attr.NOTHING, init=False)

    def __attrs_post_init__(self):
        self._remaining = self._dependency_graph
        self._ready = self.checks_without_dependencies()

    def checks_without_dependencies(self) -> typing.Set[Check]:
        return {check for check in self._remaining if not any(self._remaining.neighbors(check))}

    def mark_as_pending_execution(self, checks: typing.Set[Check]):
        self._remaining = self._remaining.subgraph(self._remaining.nodes - checks)
        self._execution_order.append(checks)

    def __next__(self) -> typing.Set[Check]:
        if not self._remaining.order():
            raise StopIteration
        checks = self._ready
        self.mark_as_pending_execution(checks)
        self._ready = self.checks_without_dependencies()
        return checks

    def __iter__(self):
        return iter(self._execution_order) if self._execution_order else self


def _evaluate(check: Check) -> CheckResult:
    started = time.perf_counter()
    with RUN_CHECK(check=check) as action:
        try:
            outcome = check()
        except RibbonKirbyError as e:
            result = CheckResult(check.name, "no error", f"{type(e).__name__}: {e}", CheckVerdict.ERROR)
        else:
            verdict = CheckVerdict.PASSED if outcome.passed else CheckVerdict.FAILED
            result = CheckResult(check.name, str(outcome.expected), str(outcome.actual), verdict)
        action.addSuccessFields(verdict=result.verdict)
    return attr.evolve(result, runtime=time.perf_counter() - started)


@attr.s(auto_attribs=True, cmp=False)
class Scenario:
    """A directed acyclic graph of checks."""

    _graph: DiGraph
    execution_order_strategy_class: typing.Type[abc.Iterator] = attr.ib(default=ExecutionOrder, kw_only=True)
    name: str = attr.ib(default="Scenario", kw_only=True)
    state: ScenarioState = attr.ib(default=ScenarioState.INITIALIZED, init=False)
    results: typing.Dict[str, CheckResult] = attr.ib(factory=dict, init=False)

    @cached_property
    def execution_order(self) -> typing.Iterator:
        return self.execution_order_strategy_class(self._graph)

    async def _run_check(self, check: Check):
        failed = sorted(
            r.name for r in self._graph.successors(check) if self.results[r.name].verdict is not CheckVerdict.PASSED
        )
        if failed:
            result = CheckResult(check.name, "requirements pass", f"failed: {', '.join(failed)}", CheckVerdict.SKIPPED)
        else:
            result = await trio.to_thread.run_sync(_evaluate, check)
        self.results[check.name] = result

    async def run(self) -> ScenarioResult:
        """Run every check layer by layer; independent checks of a layer run concurrently."""
        started = time.perf_counter()
        with RUN_SCENARIO(name=self.name) as action:
            self.state = ScenarioState.RUNNING
            for checks in self.execution_order:
                NEXT_CHECKS.log(name=self.name, next_checks=checks)
                async with trio.open_nursery() as nursery:
                    for check in sorted(checks, key=lambda c: c.name):
                        nursery.start_soon(self._run_check, check)
            self.state = ScenarioState.COMPLETED
            order = [check.name for check in self._graph]
            result = ScenarioResult(self.name, [self.results[name] for name in order], time.perf_counter() - started)
            action.addSuccessFields(passed=result.passed)
            return result


class ScenarioContainer(Injector):
    """A container which constructs the dependency graph of a scenario's checks."""

    checks = []
    name = "Scenario"

    @value
    def graph(name, checks):
        """Initialize a directed acyclic graph of checks."""
        with BUILDING_DEPENDENCY_GRAPH(name=name) as action:
            last_checks = [check for check in checks if check.last]
            if len(last_checks) > 1:
                raise ValueError(f"Only one check can be last. Found {len(last_checks)}.")
            names = [check.name for check in checks]
            if len(set(names)) != len(names):
                raise ValueError("Check names must be unique.")

            dependencies = {check: set(check.requires) for check in checks if check.include_if()}
            for check in checks:
                for dependent in check.required_by:
                    if dependent.include_if():
                        dependencies[dependent].add(check)
            graph = DiGraph(dependencies)

            if last_checks:
                last = last_checks[0]
                for check in graph:
                    if check != last:
                        graph.add_edge(last, check)

            if not is_directed_acyclic_graph(graph):
                raise ValueError("Circular dependencies found.")

            action.addSuccessFields(name=name, graph=graph)

        return graph

    scenario = Scenario
