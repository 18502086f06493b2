"""Truncated Casson handle chains attached along a meridian marker."""
import typing
from enum import Enum

import attr
from eliot import ActionType, Field

from ribbonkirby.construct.morse import MorseBuilder
from ribbonkirby.diagram.model import ComponentRole, HandleDiagram, Marker, Side
from ribbonkirby.diagram.queries import self_crossings
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import BadParameter, NoMarker

ATTACH_CASSON = ActionType(
    "ribbonkirby:construct:attach_casson_truncation",
    [
        Field("levels", int, "Stages of the chain"),
        Field.for_types("sign", [str], "Sign of the self-plumbings"),
    ],
    [Field("components", int, "Components after attaching")],
)


class CassonSign(Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @property
    def sign(self) -> int:
        return 1 if self is CassonSign.POSITIVE else -1


def _stage(index: int, sign: CassonSign) -> HandleDiagram:
    """One kinky handle: ``c<index>`` runs twice through ``w<index>`` and clasps itself."""
    framed, dotted = f"c{index}", f"w{index}"
    builder = MorseBuilder().cup(0, framed).cup(2, framed)
    builder.twist(1, 2).tag(3, "hook")
    builder.cup(0, dotted).tag(0, "next")
    builder.cross(1, "/").cross(2, "/").cross(2, "/").cross(1, "/").cap(0)
    builder.cap(1).cap(0)
    builder.role(framed, ComponentRole.framed(0)).role(dotted, ComponentRole.dotted())
    builder.mark(f"hook-{index}", "hook").mark(f"next-{index}", "next")
    d = builder.build().diagram
    clasp = self_crossings(d, framed)
    crossings = [
        c.mirrored() if i in clasp and c.sign != sign.sign else c for i, c in enumerate(d.crossings)
    ]
    return attr.evolve(d, crossings=crossings, geometry=None)


def attach_casson_truncation(
    d: HandleDiagram,
    meridian: typing.Union[Marker, str],
    levels: int,
    sign: CassonSign = CassonSign.POSITIVE,
) -> HandleDiagram:
    """Append an L-stage chain of kinky handles.

    Stage j < L is a 0-framed handle ``cj`` passing twice, in opposite
    directions, through the dotted circle ``wj`` with a self-clasp of two
    crossings of the given sign.  Stage 1 hooks the meridian site, stage j+1
    hooks ``wj`` and the last stage is a bare 0-framed meridian circle.
    """
    name = meridian.name if isinstance(meridian, Marker) else meridian
    site = d.marker(name)
    if site is None:
        raise NoMarker(name)
    if levels < 1:
        raise BadParameter(f"a truncation has at least one stage, got {levels}")
    with ATTACH_CASSON(levels=levels, sign=sign.value) as action:
        editor = DiagramEditor.from_diagram(d)
        target, target_side = site.edge, site.side
        for index in range(1, levels + 1):
            if index < levels:
                editor.disjoint_union(_stage(index, sign))
                hook = editor.markers.pop(f"hook-{index}").edge
                following = editor.markers.pop(f"next-{index}").edge
            else:
                hook = editor.add_component(f"c{index}", ComponentRole.framed(0))
                following = None
            editor.clasp(target, target_side, hook, Side.LEFT, 1)
            if following is not None:
                target, target_side = following, Side.LEFT
        result = attr.evolve(editor.to_diagram(), geometry=None)
        action.addSuccessFields(components=len(result.components))
        return result
