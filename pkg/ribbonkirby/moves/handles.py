"""Handle slides and 1-2 cancellation."""
import typing

from eliot import ActionType, Field

from ribbonkirby.diagram.model import ComponentRole, HandleDiagram, Side
from ribbonkirby.diagram.queries import linking_number, writhe
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import PreconditionFailed, UnknownComponent, UnknownSite

Path = typing.Sequence[typing.Tuple[int, bool]]

PUSHOFF = "__pushoff__"

CANCEL_REROUTE = ActionType(
    "ribbonkirby:moves:cancel_reroute",
    [
        Field("dotted", str, "The cancelled dotted circle"),
        Field("framed", str, "The cancelled framed handle"),
        Field.for_types("strands", [list], "Other framed handles meeting the dotted circle"),
    ],
    [Field("rerouted", int, "Passages slid off along the framed handle")],
)


def _require_role(d: HandleDiagram, component_id: str, predicate, kind: str, wanted: str) -> ComponentRole:
    try:
        role = d.component(component_id).role
    except UnknownComponent:
        raise UnknownSite(f"component {component_id}")
    if not predicate(role):
        raise PreconditionFailed(kind, f"{component_id} is not {wanted}")
    return role


def _require_edge(d: HandleDiagram, edge: int, component_id: str, kind: str):
    owner = d.owners.get(edge)
    if owner is None:
        raise UnknownSite(f"edge {edge}")
    if owner != component_id:
        raise PreconditionFailed(kind, f"edge {edge} belongs to {owner}, not {component_id}")


def _band_sum(
    editor: DiagramEditor,
    kind: str,
    slid: str,
    over: str,
    start: int,
    start_side: Side,
    path: Path,
    target: int,
    target_side: Side,
    twists: int,
) -> int:
    """Band ``slid`` to a parallel copy of ``over``; return the orientation sign of the sum."""
    tip = editor.push_band(start, start_side, path)
    if any(editor.owners[e] == over for index, _ in editor.slots_of(tip) for e in editor.crossings[index].edges):
        raise PreconditionFailed(kind, f"the band must end in a face beside {over}, not across it")
    twins = editor.parallel_pushoff(over, target_side, PUSHOFF)
    _, outer = editor.twist_parallel(target, twins[target], target_side, twists)
    sign = 1
    if start_side is not target_side:
        editor.reverse_component(PUSHOFF)
        sign = -1
    editor.splice(tip, outer, start_side)
    return sign


def slide_2_over_2(
    d: HandleDiagram,
    slid: str,
    over: str,
    start: int,
    start_side: Side,
    path: Path,
    target: int,
    target_side: Side,
) -> HandleDiagram:
    """Slide the framed handle ``slid`` over the framed handle ``over``.

    The band leaves ``start`` on ``start_side``, crosses ``path`` and meets a
    framing-correct parallel copy of ``over`` on ``target_side`` of ``target``.
    The slid handle gets framing f_a + f_b + 2·ε·lk(a, b), where ε is -1
    when the band meets the copy against its orientation.
    """
    if slid == over:
        raise PreconditionFailed("Slide22", "a handle cannot slide over itself")
    role_a = _require_role(d, slid, lambda r: r.is_framed, "Slide22", "a framed 2-handle")
    role_b = _require_role(d, over, lambda r: r.is_framed, "Slide22", "a framed 2-handle")
    _require_edge(d, start, slid, "Slide22")
    _require_edge(d, target, over, "Slide22")
    linking = linking_number(d, slid, over)
    editor = DiagramEditor.from_diagram(d)
    sign = _band_sum(
        editor, "Slide22", slid, over, start, start_side, path, target, target_side,
        role_b.framing - writhe(d, over),
    )
    editor.set_role(slid, ComponentRole.framed(role_a.framing + role_b.framing + 2 * sign * linking))
    return editor.to_diagram()


def slide_1_over_1(
    d: HandleDiagram,
    slid: str,
    over: str,
    start: int,
    start_side: Side,
    path: Path,
    target: int,
    target_side: Side,
) -> HandleDiagram:
    """Slide the dotted circle ``slid`` over the dotted circle ``over``.

    The band may not cross dotted circles, so the result stays in standard position.
    """
    if slid == over:
        raise PreconditionFailed("Slide11", "a dotted circle cannot slide over itself")
    _require_role(d, slid, lambda r: r.is_dotted, "Slide11", "a dotted circle")
    _require_role(d, over, lambda r: r.is_dotted, "Slide11", "a dotted circle")
    _require_edge(d, start, slid, "Slide11")
    _require_edge(d, target, over, "Slide11")
    for edge, _ in path:
        if edge not in d.owners:
            raise UnknownSite(f"edge {edge}")
        if d.component(d.owners[edge]).role.is_dotted:
            raise PreconditionFailed("Slide11", f"the band crosses the dotted circle {d.owners[edge]}")
    editor = DiagramEditor.from_diagram(d)
    _band_sum(editor, "Slide11", slid, over, start, start_side, path, target, target_side, 0)
    return editor.to_diagram()


def _passes(editor: DiagramEditor, slot, dotted: str) -> typing.Optional[bool]:
    """Whether the strand at ``slot`` goes over ``dotted``; None when it meets something else there."""
    if slot is None:
        return None
    index, position = slot
    if editor.owner(editor.crossings[index].edges[(position + 1) % 4]) != dotted:
        return None
    return position % 2 == 1


def _piercing_edges(editor: DiagramEditor, component_id: str, dotted: str) -> typing.List[int]:
    """Edges of ``component_id`` that go over ``dotted`` at one end and under it at the other."""
    return [
        edge
        for edge in editor.edges_of(component_id)
        if {_passes(editor, editor.tail(edge), dotted), _passes(editor, editor.head(edge), dotted)} == {True, False}
    ]


def _meets(editor: DiagramEditor, first: str, second: str) -> int:
    return sum(
        1 for crossing in editor.crossings.values() if {editor.owners[e] for e in crossing.edges} == {first, second}
    )


def _slide_off(
    d: HandleDiagram, dotted: str, framed: str, strand: str, edge: int, side: Side, target: int, target_side: Side,
    twisted: bool,
) -> DiagramEditor:
    editor = DiagramEditor.from_diagram(d)
    twins = editor.parallel_pushoff(framed, target_side, PUSHOFF)
    away = next(e for e in twins if e != target)
    editor.twist_parallel(away, twins[away], target_side, d.component(framed).role.framing - writhe(d, framed))
    site = twins[target]
    if twisted:
        curl = editor.crossings[editor.kink(site, target_side, 1)].edges
        site = next(e for e in curl if curl.count(e) == 2)
    sides = [s2 for s1, s2 in editor.common_face_sides(edge, site) if s1 is side]
    if not sides:
        raise PreconditionFailed("Cancel12", f"{strand} and {framed} do not meet in a face inside {dotted}")
    sign = 1
    if sides[0] is not side:
        editor.reverse_component(PUSHOFF)
        sign = -1
    editor.splice(edge, site, side)
    while True:
        bigons = editor.reducible_bigons([strand, dotted])
        if not bigons:
            break
        editor.remove_bigon(bigons[0])
    role = d.component(strand).role
    linking = linking_number(d, strand, framed)
    editor.set_role(strand, ComponentRole.framed(role.framing + d.component(framed).role.framing + 2 * sign * linking))
    return editor


def _reroute(d: HandleDiagram, dotted: str, framed: str, strand: str) -> HandleDiagram:
    """Slide ``strand`` over a parallel of ``framed`` so one of its passages through ``dotted`` goes away."""
    editor = DiagramEditor.from_diagram(d)
    before = _meets(editor, strand, dotted)
    sites = [
        (edge, target, pair)
        for edge in _piercing_edges(editor, strand, dotted)
        for target in _piercing_edges(editor, framed, dotted)
        for pair in editor.common_face_sides(edge, target)
    ]
    if not sites:
        raise PreconditionFailed("Cancel12", f"{strand} passes through {dotted} away from {framed}")
    edge, target, (side, target_side) = sites[0]
    # a planar band cancels the passage when both pierce alike, a half-twisted one otherwise
    for twisted in (False, True):
        try:
            slid = _slide_off(d, dotted, framed, strand, edge, side, target, target_side, twisted)
        except PreconditionFailed:
            continue
        if _meets(slid, strand, dotted) < before:
            return slid.to_diagram()
    raise PreconditionFailed("Cancel12", f"{strand} cannot be slid off {dotted} along {framed}")


def cancel_1_2(d: HandleDiagram, dotted: str, framed: str) -> HandleDiagram:
    """Erase a dotted circle together with a framed handle passing once through it.

    ``framed`` must cross ``dotted`` exactly twice, once over and once under.
    Other framed strands through ``dotted`` are first slid over a parallel
    of ``framed`` and so leave it along ``framed``.
    """
    _require_role(d, dotted, lambda r: r.is_dotted, "Cancel12", "a dotted circle")
    _require_role(d, framed, lambda r: r.is_framed, "Cancel12", "a framed 2-handle")
    meetings = [index for index in range(len(d.crossings)) if dotted in d.crossing_components(index)]
    unders = [index for index in meetings if d.crossing_components(index)[0] == framed]
    overs = [index for index in meetings if d.crossing_components(index)[1] == framed]
    if len(unders) != 1 or len(overs) != 1:
        raise PreconditionFailed("Cancel12", f"{framed} does not pass through {dotted} geometrically once")
    others = sorted(
        {owner for index in meetings for owner in d.crossing_components(index)} - {dotted, framed}
    )
    for other in others:
        if not d.component(other).role.is_framed:
            raise PreconditionFailed("Cancel12", f"{other} meets the dotted circle {dotted}")
    with CANCEL_REROUTE(dotted=dotted, framed=framed, strands=others) as action:
        rerouted = 0
        for other in others:
            while _piercing_edges(DiagramEditor.from_diagram(d), other, dotted):
                d = _reroute(d, dotted, framed, other)
                rerouted += 1
        action.addSuccessFields(rerouted=rerouted)
    editor = DiagramEditor.from_diagram(d)
    editor.remove_component(framed)
    editor.remove_component(dotted)
    return editor.to_diagram()
