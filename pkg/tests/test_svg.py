from ribbonkirby.cli_io.svg import COLOURS, RenderOptions, render_svg
from ribbonkirby.construct import disc_complement_Rn_prime, unknot


def test_rendering_is_deterministic(cinquefoil):
    assert render_svg(cinquefoil) == render_svg(cinquefoil)


def test_round_unknot_is_one_circle():
    svg = render_svg(unknot())

    assert svg.count("<circle") == 1
    assert svg.startswith("<svg")


def test_layout_is_used_when_fresh(cinquefoil):
    svg = render_svg(cinquefoil)

    assert "schematic" not in svg
    assert svg.count("<polyline") == len(cinquefoil.edges) + 2 * len(cinquefoil.crossings)


def test_schematic_badge(trefoil):
    assert "schematic" in render_svg(trefoil)


def test_handle_diagram_styles():
    svg = render_svg(disc_complement_Rn_prime(3))

    assert 'stroke-dasharray="8,5"' in svg
    assert COLOURS["dotted"] in svg and COLOURS["framed"] in svg
    assert 'class="framing"' in svg
    assert 'id="component-h"' in svg


def test_labels_can_be_left_out():
    svg = render_svg(disc_complement_Rn_prime(3), RenderOptions(labels=False))

    assert 'class="framing"' not in svg
    assert 'class="dot"' not in svg
