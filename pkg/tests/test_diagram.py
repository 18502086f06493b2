import attr
import pytest
from eliot.testing import LoggedAction

from ribbonkirby.construct import unknot
from ribbonkirby.diagram import (
    Component,
    ComponentRole,
    Crossing,
    DiagramEditor,
    HandleDiagram,
    Marker,
    Side,
    crossing_from_rays,
    crossings_between,
    faces,
    linking_number,
    mirror,
    reverse,
    validate,
    writhe,
)
from ribbonkirby.diagram.model import slot_is_incoming
from ribbonkirby.errors import Disconnected, UnknownComponent
from tests.assertions import assert_log_message_field_equals, assert_logged_action_succeeded


def hopf_link(sign=1):
    """Two round circles clasped once; both crossings carry ``sign``."""
    editor = DiagramEditor()
    a = editor.add_component("A", ComponentRole.plain())
    b = editor.add_component("B", ComponentRole.plain())
    editor.clasp(a, Side.LEFT, b, Side.LEFT, sign)
    return editor.to_diagram()


def test_crossing_strands():
    positive = Crossing((1, 5, 2, 4), 1)
    negative = Crossing((1, 5, 2, 4), -1)

    assert positive.under == negative.under == (1, 2)
    assert positive.over == (4, 5)
    assert negative.over == (5, 4)


def test_crossing_rejects_bad_input():
    with pytest.raises(ValueError):
        Crossing((1, 2, 3), 1)


@pytest.mark.parametrize("sign", [0, 2, -3])
def test_crossing_sign_is_a_unit(sign):
    with pytest.raises(ValueError, match="sign"):
        Crossing((1, 2, 3, 4), sign)


def test_crossing_sign_defaults_to_positive():
    assert Crossing((1, 2, 3, 4)).sign == 1


def test_mirrored_crossing_keeps_the_strands():
    crossing = Crossing((1, 5, 2, 4), 1)
    flipped = crossing.mirrored()

    assert flipped.sign == -1
    assert set(flipped.under) == set(crossing.over)
    assert set(flipped.over) == set(crossing.under)
    assert flipped.mirrored() == crossing


def test_incoming_slots():
    assert slot_is_incoming(0, 1) and slot_is_incoming(0, -1)
    assert not slot_is_incoming(2, 1) and not slot_is_incoming(2, -1)
    assert slot_is_incoming(3, 1) and not slot_is_incoming(1, 1)
    assert slot_is_incoming(1, -1) and not slot_is_incoming(3, -1)


def test_crossing_from_rays():
    crossing = crossing_from_rays([(2, False), (4, True), (1, True), (5, False)], 0)

    assert crossing == Crossing((1, 5, 2, 4), 1)


def test_role_parsing():
    assert ComponentRole.parse("dotted").is_dotted
    assert ComponentRole.parse("plain").is_plain
    assert ComponentRole.parse("framed:-2") == ComponentRole.framed(-2)
    assert ComponentRole.framed(3).text == "framed:3"
    assert str(ComponentRole.framed(0)) == "framed(0)"

    with pytest.raises(ValueError):
        ComponentRole.parse("dotted:1")

    with pytest.raises(ValueError):
        ComponentRole.parse("ribbon")


def test_trefoil_is_valid(trefoil, logger):
    report = validate(trefoil)

    assert report.is_valid
    assert (report.vertices, report.edges, report.faces) == (3, 6, 5)

    logged_action = LoggedAction.of_type(logger.messages, "ribbonkirby:diagram:validate")[0]
    assert_log_message_field_equals(logged_action.start_message, "crossings", 3)
    assert_log_message_field_equals(logged_action.end_message, "violations", [])
    assert_logged_action_succeeded(logged_action)


def test_round_unknot_is_valid():
    d = unknot()

    assert validate(d).is_valid
    assert d.is_round("K")
    assert len(faces(d)) == 2


def test_unpaired_edge_is_reported(trefoil):
    crossings = list(trefoil.crossings)
    crossings[0] = Crossing((1, 5, 2, 9), 1)
    broken = attr.evolve(trefoil, crossings=crossings)

    assert "EdgePairing" in validate(broken).kinds()


def test_wrong_traversal_order_is_reported(trefoil):
    component = trefoil.components[0]
    broken = attr.evolve(trefoil, components=[attr.evolve(component, edges=(1, 3, 2, 4, 5, 6))])

    assert "ComponentCycle" in validate(broken).kinds()


def test_dotted_circles_must_not_cross():
    d = hopf_link()
    dotted = [attr.evolve(c, role=ComponentRole.dotted()) for c in d.components]

    assert "DottedLink" in validate(attr.evolve(d, components=dotted)).kinds()


def test_dotted_self_crossing_is_reported(trefoil):
    dotted = attr.evolve(trefoil.components[0], role=ComponentRole.dotted())

    assert "StandardPosition" in validate(attr.evolve(trefoil, components=[dotted])).kinds()


def test_duplicate_markers_are_reported(trefoil):
    broken = attr.evolve(trefoil, markers=[Marker("m", 1), Marker("m", 2)])

    assert "Marker" in validate(broken).kinds()


def test_marker_on_unknown_edge_is_reported(trefoil):
    broken = attr.evolve(trefoil, markers=[Marker("m", 42)])

    assert "Marker" in validate(broken).kinds()


def test_faces_of_split_diagram():
    editor = DiagramEditor()
    editor.add_component("A", ComponentRole.plain())
    editor.add_component("B", ComponentRole.plain())

    with pytest.raises(Disconnected):
        faces(editor.to_diagram())


def test_trefoil_queries(trefoil):
    assert writhe(trefoil) == 3
    assert writhe(mirror(trefoil)) == -3
    assert writhe(trefoil, "K") == 3
    assert trefoil.summary() == {"crossings": 3, "components": 1, "dotted": 0, "framed": 0, "plain": 1}


@pytest.mark.parametrize("sign", [1, -1])
def test_hopf_link_queries(sign):
    d = hopf_link(sign)

    assert validate(d).is_valid
    assert crossings_between(d, "A", "B") == 2
    assert linking_number(d, "A", "B") == sign
    assert linking_number(reverse(d, "A"), "A", "B") == -sign


def test_reverse_twice_is_identity(trefoil):
    assert reverse(reverse(trefoil, "K"), "K") == trefoil
    assert validate(reverse(trefoil, "K")).is_valid


def test_unknown_component(trefoil):
    with pytest.raises(UnknownComponent):
        trefoil.component("L")


def test_editor_round_trip(trefoil):
    assert DiagramEditor.from_diagram(trefoil).to_diagram() == trefoil


def test_editor_marks_geometry_stale(cinquefoil):
    assert cinquefoil.geometry is not None and not cinquefoil.geometry.stale

    editor = DiagramEditor.from_diagram(cinquefoil)
    editor.kink(cinquefoil.edges[0], Side.LEFT, 1)

    assert editor.to_diagram().geometry.stale


def test_diagram_equality_ignores_geometry(cinquefoil):
    assert attr.evolve(cinquefoil, geometry=None) == cinquefoil
    assert isinstance(cinquefoil, HandleDiagram)
    assert all(isinstance(c, Component) for c in cinquefoil.components)
