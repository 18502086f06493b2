import pytest
from eliot.testing import LoggedAction

from ribbonkirby.cli_io.checks import (
    thm1_scenario,
    thm2_scenario,
    thm3_scenario,
    verify,
    verify_thm1,
    verify_thm2,
    verify_thm3,
)
from ribbonkirby.cli_io.scenarios import CheckVerdict
from ribbonkirby.construct import CassonSign
from tests.assertions import assert_log_message_field_equals, assert_logged_action_succeeded


def names(container):
    return [check.name for check in container.checks]


def test_thm1_catalogue():
    container = thm1_scenario([3, 5], levels=3, sign=CassonSign.NEGATIVE)

    assert names(container) == [
        "structure-3",
        "ribbon-surgery-3",
        "homology-3",
        "casson-3-3-",
        "structure-5",
        "ribbon-surgery-5",
        "homology-5",
        "casson-5-3-",
    ]


def test_thm2_catalogue():
    assert names(thm2_scenario([3])) == ["script-3", "replay-3", "meridian-3"]


def test_thm3_catalogue():
    container = thm3_scenario([3, 5], [0, 1])

    assert names(container) == [
        "alexander-k-invariance-3",
        "max-maslov-3",
        "alexander-k-invariance-5",
        "max-maslov-5",
        "distinguished-across-n",
    ]
    assert container.checks[-1].last


def test_verify_thm1(logger):
    result = verify_thm1([3])

    assert result.passed, result.format_text()
    assert result.check("homology-3").actual == "('Z', 'Z', 0)"

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:scenarios:run")[0]
    assert_log_message_field_equals(logged_action.start_message, "name", "thm1")
    assert_log_message_field_equals(logged_action.end_message, "passed", True)
    assert_logged_action_succeeded(logged_action)


def test_verify_thm3():
    result = verify_thm3([3, 5], [-1, 0, 1])

    assert result.passed, result.format_text()
    assert result.check("max-maslov-5").actual == "[4, 4, 4]"
    assert result.to_document()["verdict"] == "success"


def test_domain_errors_become_error_verdicts():
    result = verify(thm3_scenario([4], [0]))

    assert not result.passed
    assert result.check("max-maslov-4").verdict is CheckVerdict.ERROR
    assert result.check("distinguished-across-n").verdict is CheckVerdict.SKIPPED


@pytest.mark.slow
def test_verify_thm2():
    result = verify_thm2([3])

    assert result.passed, result.format_text()
    assert result.check("meridian-3").actual == "('dotted', 'L', '0')"
