import pytest
from eliot.testing import LoggedAction
from hypothesis import given
from hypothesis import strategies as st

from ribbonkirby.algebra import (
    FreeWord,
    GroupPresentation,
    LaurentPoly,
    TietzeStatus,
    alexander_from_presentation,
    fox_derivative,
    tietze_simplify,
)
from ribbonkirby.errors import BadAbelianization
from tests.assertions import assert_log_message_field_equals, assert_logged_action_succeeded
from tests.strategies import free_words

t = LaurentPoly.monomial(1)


def two_bridge_torus_knot_group(n):
    """Wirtinger presentation of the closure of σ₁ⁿ: x_{i+2} = x_{i+1} x_i x_{i+1}⁻¹."""
    relators = [
        FreeWord([((i + 1) % n, 1), (i, 1), ((i + 1) % n, -1), ((i + 2) % n, -1)]) for i in range(n)
    ]
    return GroupPresentation(n, relators)


def test_free_reduction():
    word = FreeWord([(0, 1), (1, 1), (1, -1), (0, 1), (2, -1)])

    assert word.letters == ((0, 1), (0, 1), (2, -1))
    assert (word * word.inverse()).letters == ()
    assert FreeWord.from_exponents([(1, -2)]) == FreeWord([(1, -1), (1, -1)])


@given(word=free_words())
def test_free_words_are_reduced(word):
    assert all(a != (b[0], -b[1]) for a, b in zip(word.letters, word.letters[1:]))
    assert not (word * word.inverse())


def test_fox_derivative_of_conjugate():
    relator = FreeWord([(1, 1), (0, 1), (1, -1), (2, -1)])

    assert fox_derivative(relator, 0, [1, 1, 1]) == t
    assert fox_derivative(relator, 1, [1, 1, 1]) == 1 - t
    assert fox_derivative(relator, 2, [1, 1, 1]) == LaurentPoly.constant(-1)


def test_unknot_group(logger):
    assert alexander_from_presentation(GroupPresentation(1), [1]) == LaurentPoly.constant(1)

    [action] = LoggedAction.of_type(logger.messages, "ribbonkirby:algebra:alexander_from_presentation")
    assert_logged_action_succeeded(action)
    assert_log_message_field_equals(action.end_message, "polynomial", "1")


def test_trefoil_group():
    assert alexander_from_presentation(two_bridge_torus_knot_group(3), [1, 1, 1]) == t - 1 + t ** -1


def test_cinquefoil_group():
    expected = t ** 2 - t + 1 - t ** -1 + t ** -2

    assert alexander_from_presentation(two_bridge_torus_knot_group(5), [1] * 5) == expected


def test_bad_abelianization():
    with pytest.raises(BadAbelianization):
        alexander_from_presentation(GroupPresentation(2, [FreeWord([(0, 1)])]), [1, 1])


def test_tietze_trivializes_cyclic_relator(logger):
    simplified, status = tietze_simplify(GroupPresentation(1, [FreeWord([(0, 1)])]))

    assert status is TietzeStatus.TRIVIALIZED
    assert simplified.generator_count == 0

    [action] = LoggedAction.of_type(logger.messages, "ribbonkirby:algebra:tietze_simplify")
    assert_log_message_field_equals(action.end_message, "status", "trivialized")


def test_tietze_deletes_dead_generator():
    simplified, status = tietze_simplify(GroupPresentation(2, [FreeWord([(1, 1)])], ["x", "y"]))

    assert status is TietzeStatus.REDUCED
    assert simplified.generator_count == 1
    assert simplified.relators == ()
    assert simplified.names == ("x",)


def test_tietze_cannot_kill_commutator():
    commutator = FreeWord([(0, 1), (1, 1), (0, -1), (1, -1)])

    simplified, status = tietze_simplify(GroupPresentation(2, [commutator]))

    assert status in (TietzeStatus.STUCK, TietzeStatus.REDUCED)
    assert simplified.generator_count == 2


def test_tietze_rejects_empty_budget():
    with pytest.raises(ValueError):
        tietze_simplify(GroupPresentation(1), budget=0)


@given(relators=st.lists(free_words(generators=3, max_length=6), max_size=3))
def test_tietze_preserves_abelianization(relators):
    presentation = GroupPresentation(3, relators)

    simplified, status = tietze_simplify(presentation, budget=20)

    assert simplified.abelianization() == presentation.abelianization()
    if status is TietzeStatus.TRIVIALIZED:
        assert presentation.abelianization() == (0, [])


def test_trefoil_group_is_not_trivialized():
    simplified, status = tietze_simplify(two_bridge_torus_knot_group(3))

    assert status is not TietzeStatus.TRIVIALIZED
    assert simplified.abelianization() == (1, [])
