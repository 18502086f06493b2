import itertools

import pytest
from eliot.testing import LoggedAction, LoggedMessage
from hypothesis import HealthCheck, given, settings
from networkx import DiGraph

from ribbonkirby.cli_io.scenarios import (
    CheckResult,
    CheckVerdict,
    ExecutionOrder,
    Outcome,
    Scenario,
    ScenarioContainer,
    ScenarioResult,
    ScenarioState,
)
from ribbonkirby.errors import BadParameter
from tests.assertions import (
    assert_field_equals_in_any_message,
    assert_log_message_field_equals,
    assert_logged_action_failed,
    assert_logged_action_succeeded,
)
from tests.mocks import create_mock_check
from tests.strategies import dependency_graphs


def container_of(*checks, name="Test"):
    return type("MyScenarioContainer", (ScenarioContainer,), {"checks": list(checks), "name": name})


def test_scenario_container_dependencies_graph(logger):
    check1 = create_mock_check("check1")
    check2 = create_mock_check("check2", requires={check1})
    check3 = create_mock_check("check3", last=True)
    check4 = create_mock_check("check4", required_by={check2})
    check5 = create_mock_check("check5", include_if=False)

    MyScenarioContainer = container_of(check1, check4, check2, check3, check5)
    scenario = MyScenarioContainer.scenario

    assert list(scenario._graph.nodes) == [check1, check4, check2, check3]
    assert set(scenario._graph.edges) == {
        (check2, check1),
        (check2, check4),
        (check3, check1),
        (check3, check4),
        (check3, check2),
    }
    assert scenario.name == "Test"
    assert scenario.state is ScenarioState.INITIALIZED

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:scenarios:building_dependency_graph")[0]
    assert_log_message_field_equals(logged_action.start_message, "name", "Test")
    assert_log_message_field_equals(logged_action.end_message, "name", "Test")
    assert_log_message_field_equals(
        logged_action.end_message,
        "graph",
        lambda value: value.nodes == scenario._graph.nodes and value.edges == scenario._graph.edges,
    )
    assert_logged_action_succeeded(logged_action)


def test_scenario_container_with_two_last_checks(logger):
    check1 = create_mock_check("check1", last=True)
    check2 = create_mock_check("check2", requires={check1})
    check3 = create_mock_check("check3", last=True)

    MyScenarioContainer = container_of(check1, check2, check3)

    with pytest.raises(ValueError, match="Only one check can be last. Found 2."):
        MyScenarioContainer.scenario

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:scenarios:building_dependency_graph")[0]
    assert_logged_action_failed(logged_action)
    assert_log_message_field_equals(logged_action.end_message, "reason", "Only one check can be last. Found 2.")
    assert_log_message_field_equals(logged_action.end_message, "exception", "builtins.ValueError")


def test_scenario_container_with_duplicate_names():
    MyScenarioContainer = container_of(create_mock_check("check"), create_mock_check("check"))

    with pytest.raises(ValueError, match="Check names must be unique."):
        MyScenarioContainer.scenario


def test_scenario_container_with_circular_dependencies():
    check1 = create_mock_check("check1", last=True)
    check2 = create_mock_check("check2", requires={check1})
    check1.requires.add(check2)

    with pytest.raises(ValueError, match="Circular dependencies found."):
        container_of(check1, check2).scenario


def test_scenario_container_with_circular_dependencies_on_an_excluded_check():
    check1 = create_mock_check("check1")
    check2 = create_mock_check("check2", requires={check1}, include_if=False)
    check1.requires.add(check2)

    try:
        container_of(check1, check2).scenario
    except ValueError:
        pytest.fail("Circular dependencies found")


async def test_scenario_run(logger):
    first = create_mock_check("first")
    second = create_mock_check("second", requires={first}, outcome=Outcome("Z", "Z"))
    broken = create_mock_check("broken", outcome=Outcome(2, 3))
    skipped = create_mock_check("skipped", requires={broken})
    summary = create_mock_check("summary", last=True)

    scenario = container_of(first, second, broken, skipped, summary).scenario
    result = await scenario.run()

    assert scenario.state is ScenarioState.COMPLETED
    assert not result.passed
    assert [check.name for check in result.checks] == ["first", "second", "broken", "skipped", "summary"]
    assert result.check("first").verdict is CheckVerdict.PASSED
    assert result.check("second").verdict is CheckVerdict.PASSED
    assert result.check("broken").verdict is CheckVerdict.FAILED
    assert result.check("broken").expected == "2" and result.check("broken").actual == "3"
    assert result.check("skipped").verdict is CheckVerdict.SKIPPED
    assert result.check("summary").verdict is CheckVerdict.SKIPPED
    first.function.assert_called_once_with()
    skipped.function.assert_not_called()

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:scenarios:run")[0]
    assert_log_message_field_equals(logged_action.start_message, "name", "Test")
    assert_log_message_field_equals(logged_action.end_message, "passed", False)
    assert_logged_action_succeeded(logged_action)

    messages = LoggedMessage.of_type(logger.messages, "ribbonkirby:scenarios:next_checks")
    assert len(messages) == 3
    assert_log_message_field_equals(messages[0].message, "next_checks", ["Check(broken)", "Check(first)"])
    assert_log_message_field_equals(messages[1].message, "next_checks", ["Check(second)", "Check(skipped)"])
    assert_log_message_field_equals(messages[2].message, "next_checks", ["Check(summary)"])

    logged_actions = LoggedAction.of_type(logger.messages, "ribbonkirby:scenarios:check")
    assert len(logged_actions) == 3
    start_messages = [logged_action.start_message for logged_action in logged_actions]
    assert_field_equals_in_any_message(start_messages, "check", "Check(broken)")
    for logged_action in logged_actions:
        assert_logged_action_succeeded(logged_action)


async def test_scenario_run_reports_domain_errors():
    failing = create_mock_check("failing", side_effect=BadParameter("n must be odd"))

    result = await container_of(failing).scenario.run()

    assert result.check("failing").verdict is CheckVerdict.ERROR
    assert result.check("failing").actual == "BadParameter: n must be odd"


async def test_scenario_run_passes():
    checks = [create_mock_check(f"check{i}") for i in range(4)]

    result = await container_of(*checks).scenario.run()

    assert result.passed
    assert result.to_document()["verdict"] == "success"
    assert result.format_text().startswith("Test: success")


def test_scenario_with_custom_execution_order():
    check = create_mock_check("check")
    graph = DiGraph()
    graph.add_node(check)

    scenario = Scenario(graph, name="Custom", execution_order_strategy_class=lambda g: iter([{check}]))

    assert list(scenario.execution_order) == [{check}]


def test_execution_order_initialization():
    graph = DiGraph([(1, 0)])
    execution_order = ExecutionOrder(graph)

    assert execution_order._dependency_graph == execution_order._remaining == graph
    assert execution_order._ready == {0}


@given(graph=dependency_graphs())
@settings(suppress_health_check=(HealthCheck.too_slow,))
def test_mark_as_pending_execution(graph):
    execution_order = ExecutionOrder(graph)
    pending = execution_order.checks_without_dependencies()

    execution_order.mark_as_pending_execution(pending)

    assert all(node not in execution_order._remaining.nodes for node in pending)
    assert execution_order._execution_order == [pending]


@given(graph=dependency_graphs())
@settings(suppress_health_check=(HealthCheck.too_slow,))
def test_execution_order(graph):
    layers = list(ExecutionOrder(graph))
    layer_of = {node: number for number, layer in enumerate(layers) for node in layer}

    assert sorted(itertools.chain.from_iterable(layers)) == sorted(graph.nodes)
    assert all(layer_of[required] < layer_of[node] for node, required in graph.edges)
    for number, layer in enumerate(layers[1:], start=1):
        assert all(any(layer_of[r] == number - 1 for r in graph.successors(node)) for node in layer)


def test_results_documents():
    result = ScenarioResult("thm", [CheckResult("a", "1", "2", CheckVerdict.FAILED, 0.12345)], 1.0)

    assert result.to_document() == {
        "scenario": "thm",
        "verdict": "failure",
        "runtime": 1.0,
        "checks": [{"name": "a", "expected": "1", "actual": "2", "verdict": "failed", "runtime": 0.123}],
    }
    assert "[ failed] a: expected 1, got 2" in result.format_text()
