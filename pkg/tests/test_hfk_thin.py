import pytest
from eliot.testing import LoggedAction, LoggedMessage
from hypothesis import given
from hypothesis import strategies as st

from ribbonkirby.algebra import LaurentPoly
from ribbonkirby.errors import BadParameter, NotApplicable, NotSymmetric, OddSignature
from ribbonkirby.hfk_thin import (
    ThinHFKTable,
    Verdict,
    family_member,
    family_report,
    max_maslov_red,
    thin_table,
    trefoil_calibration,
)
from ribbonkirby.invariants import alexander_sig_det
from tests.assertions import assert_log_message_field_equals, assert_logged_action_succeeded

t = LaurentPoly.monomial(1)


def test_trefoil_calibration(trefoil):
    table = trefoil_calibration()

    assert table.entries == ((-1, -2, 1), (0, -1, 1), (1, 0, 1))
    assert table.total_rank == 3
    assert table.is_symmetric()
    assert table.thinness_assumed

    invariants = alexander_sig_det(trefoil)
    assert thin_table(invariants.alexander, invariants.signature).entries == table.entries


def test_unknot_table():
    table = thin_table(LaurentPoly.constant(1), 0)

    assert table.entries == ((0, 0, 1),)
    with pytest.raises(NotApplicable):
        max_maslov_red(table, knot_is_slice=True)


def test_unnormalized_alexander_polynomial():
    with pytest.raises(NotSymmetric):
        thin_table(t ** 2 - t + 1, 0)


def test_odd_signature():
    with pytest.raises(OddSignature):
        thin_table(t - 1 + t ** -1, -1)


def test_max_maslov_needs_a_slice_knot():
    with pytest.raises(NotApplicable):
        max_maslov_red(trefoil_calibration(), knot_is_slice=False)


@given(n=st.sampled_from([3, 5, 7, 9]), sigma=st.sampled_from([-4, -2, 0, 2, 4]))
def test_thin_tables_are_symmetric(n, sigma):
    alexander = (t - 1 + t ** -1) ** ((n - 1) // 2)
    table = thin_table(alexander, sigma)

    assert table.is_symmetric()
    assert table.total_rank == sum(abs(c) for c in alexander.coefficients.values())
    assert all(m - s == sigma // 2 for s, m, _ in table.entries)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_band_sum_member(n, logger):
    member = family_member(n, 1)

    assert member.signature == 0
    assert member.max_maslov == n - 1
    assert member.alexander.max_degree == n - 1
    assert member.table.thinness_assumed

    logged_message = LoggedMessage.of_type(logger.messages, "ribbonkirby:hfk_thin:family_member")[0]
    assert_log_message_field_equals(logged_message.message, "max_maslov", n - 1)


def test_family_report(logger):
    report = family_report([3, 5], [-1, 0, 1])

    assert len(report.members) == 6
    assert len(report.comparisons) == 15
    assert report.tables_agree_within_n()
    assert report.verdict((3, -1), (3, 1)) is Verdict.INDISTINGUISHABLE
    assert report.verdict((5, 0), (3, 0)) is Verdict.DISTINGUISHED
    assert report.member(5, 1).max_maslov == 4

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:hfk_thin:family_report")[0]
    assert_log_message_field_equals(logged_action.start_message, "n_values", [3, 5])
    assert_log_message_field_equals(logged_action.end_message, "distinguished", 9)
    assert_logged_action_succeeded(logged_action)


def test_family_report_document():
    document = family_report([3], [0, 2]).to_document()

    assert [member["max_maslov"] for member in document["members"]] == [2, 2]
    assert document["comparisons"] == [
        {"first": [3, 0], "second": [3, 2], "verdict": "Indistinguishable-by-this-invariant"}
    ]
    assert "Indistinguishable" in family_report([3], [0, 2]).format_table()


def test_unknown_comparison():
    with pytest.raises(KeyError):
        family_report([3], [0]).verdict((3, 0), (5, 0))


@pytest.mark.parametrize("n", [1, 2, 4, -3])
def test_family_needs_odd_n(n):
    with pytest.raises(BadParameter):
        family_report([n], [0])


def test_table_document():
    document = ThinHFKTable([(0, 0, 1)], 0).to_document()

    assert document == {"entries": [{"s": 0, "m": 0, "rank": 1}], "sigma": 0, "thinness_assumed": None}
