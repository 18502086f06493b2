from unittest.mock import Mock

from ribbonkirby.cli_io.scenarios import Check, Outcome


def create_mock_check(
    name,
    requires=set(),
    required_by=set(),
    last=False,
    include_if=True,
    outcome=Outcome(1, 1),
    side_effect=None,
):
    function = Mock(name=name, return_value=outcome, side_effect=side_effect)
    check = Check(name, function, set(requires), set(required_by), last)
    if not include_if:
        check.include_if = lambda: False

    return check
