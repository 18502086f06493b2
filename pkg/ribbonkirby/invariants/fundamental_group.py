"""
Fundamental groups of handle diagrams.

Each dotted circle bounds a flat disc; a framed strand passing under the
circle pierces that disc.  Walking along a framed handle and recording every
piercing as the circle's generator, raised to the crossing sign, gives the
relator of the handle.

Dotted circles may also pass under each other, as they do straight after a
ribbon surgery.  Their arcs then get Wirtinger generators and relators, and
the presentation is Tietze-simplified back towards one generator per circle.
"""
import typing

from eliot import ActionType, Field
from networkx import Graph, connected_components

from ribbonkirby.algebra.presentations import GroupPresentation, tietze_simplify
from ribbonkirby.algebra.words import FreeWord
from ribbonkirby.diagram.model import HandleDiagram
from ribbonkirby.errors import NotStandardPosition

PI1 = ActionType(
    "ribbonkirby:invariants:pi1",
    [
        Field("dotted", int, "Dotted circles, one generator each"),
        Field("framed", int, "Framed handles, one relator each"),
    ],
    [Field("presentation", str, "The presentation read off the diagram")],
)


def _check_roles(d: HandleDiagram):
    if d.plain:
        raise NotStandardPosition(f"{d.plain[0].id} is neither dotted nor framed")


def check_standard_position(d: HandleDiagram):
    _check_roles(d)
    for index in range(len(d.crossings)):
        under, over = d.crossing_components(index)
        if not (d.component(under).role.is_dotted and d.component(over).role.is_dotted):
            continue
        if under == over:
            raise NotStandardPosition(f"dotted circle {under} crosses itself at crossing {index}")
        raise NotStandardPosition(f"dotted circles {under} and {over} meet at crossing {index}")


def _dotted_arcs(d: HandleDiagram) -> typing.Tuple[typing.Dict[int, int], typing.List[str]]:
    """Number the arcs of the dotted circles; an arc ends only where it passes under a dotted circle."""
    dotted = {circle.id for circle in d.dotted}
    owner = d.owners
    arcs = Graph()
    arcs.add_nodes_from(edge for circle in d.dotted for edge in circle.edges)
    for crossing in d.crossings:
        if owner[crossing.over[0]] in dotted:
            arcs.add_edge(*crossing.over)
        if owner[crossing.edges[0]] in dotted and owner[crossing.over[0]] not in dotted:
            arcs.add_edge(crossing.edges[0], crossing.edges[2])
    piece_of = {edge: frozenset(piece) for piece in connected_components(arcs) for edge in piece}
    number: typing.Dict[frozenset, int] = {}
    names = []
    for circle in d.dotted:
        seen = 0
        for edge in circle.edges:
            piece = piece_of[edge]
            if piece in number:
                continue
            number[piece] = len(names)
            names.append(circle.id if not seen else f"{circle.id}.{seen}")
            seen += 1
    return {edge: number[piece] for edge, piece in piece_of.items()}, names


def _check_unlink(pres: GroupPresentation, circles: int):
    simplified, _ = tietze_simplify(pres)
    if simplified.relators or simplified.generator_count != circles:
        raise NotStandardPosition(f"the dotted circles do not simplify to an unlink group: {simplified}")


def pi1(d: HandleDiagram) -> GroupPresentation:
    _check_roles(d)
    arc, names = _dotted_arcs(d)
    with PI1(dotted=len(d.dotted), framed=len(d.framed)) as action:
        relators = []
        for crossing in d.crossings:
            if crossing.over[0] not in arc or crossing.edges[0] not in arc:
                continue
            k = FreeWord.generator(arc[crossing.over[0]])
            i = FreeWord.generator(arc[crossing.edges[0]])
            j = FreeWord.generator(arc[crossing.edges[2]])
            if crossing.sign > 0:
                relators.append(k.inverse() * i * k * j.inverse())
            else:
                relators.append(k * i * k.inverse() * j.inverse())
        wirtinger = bool(relators)
        if wirtinger:
            _check_unlink(GroupPresentation(len(names), relators, names), len(d.dotted))
        for handle in d.framed:
            letters = []
            for edge in handle.edges:
                _, head = d.edge_ends[edge]
                if head is None or head[1] != 0:
                    continue
                crossing = d.crossings[head[0]]
                if crossing.over[0] in arc:
                    letters.append((arc[crossing.over[0]], crossing.sign))
            relators.append(FreeWord(letters))
        pres = GroupPresentation(len(names), relators, names)
        if wirtinger:
            pres, _ = tietze_simplify(pres)
        action.addSuccessFields(presentation=str(pres))
        return pres
