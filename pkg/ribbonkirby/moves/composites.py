"""
Composite rewrites built from a slide and a cancellation, and the unwinding isotopy.

Both composites band-sum the two arcs that pass through the disc of the
cancelled pair, across the face the cancelled component used to split.
"""
import typing

from ribbonkirby.diagram.model import ComponentRole, HandleDiagram
from ribbonkirby.diagram.queries import linking_number
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import PatternMismatch, PreconditionFailed, UnknownComponent, UnknownSite


def _role(d: HandleDiagram, component_id: str) -> ComponentRole:
    try:
        return d.component(component_id).role
    except UnknownComponent:
        raise UnknownSite(f"component {component_id}")


def _threaded_once(d: HandleDiagram, hub: str, spokes: typing.Sequence[str], kind: str):
    """Require each spoke to cross ``hub`` twice, once over and once under, and nothing else to cross it."""
    meetings: typing.Dict[str, typing.List[int]] = {}
    for index in range(len(d.crossings)):
        under, over = d.crossing_components(index)
        if hub not in (under, over):
            continue
        if under == over:
            raise PatternMismatch(kind, f"{hub} crosses itself")
        other = over if under == hub else under
        if other not in spokes:
            raise PatternMismatch(kind, f"{other} crosses {hub}")
        meetings.setdefault(other, []).append(index)
    for spoke in spokes:
        found = meetings.get(spoke, [])
        unders = [index for index in found if d.crossing_components(index)[0] == spoke]
        if len(found) != 2 or len(unders) != 1:
            raise PatternMismatch(kind, f"{spoke} does not pass through {hub} geometrically once")
    return meetings


def _inner_edges(d: HandleDiagram, component_id: str, crossings: typing.Collection[int]) -> typing.List[int]:
    """Edges of a component whose both ends lie on the given crossings."""
    found = []
    for edge in d.component(component_id).edges:
        ends = [index for index, _ in d.occurrences.get(edge, ())]
        if ends and all(index in crossings for index in ends):
            found.append(edge)
    return found


def _sum_through(
    d: HandleDiagram, hub: str, kept: str, merged: str, kind: str
) -> typing.Tuple[DiagramEditor, int]:
    """Erase ``hub`` and band-sum ``merged`` into ``kept`` across the freed face.

    Returns the editor and the orientation sign of the sum.
    """
    hub_crossings = {index for index in range(len(d.crossings)) if hub in d.crossing_components(index)}
    editor = DiagramEditor.from_diagram(d)
    tags = {}
    for owner in (kept, merged):
        for edge in _inner_edges(d, owner, hub_crossings):
            name = f"__inner__{owner}__{edge}"
            editor.add_marker(name, edge)
            tags[name] = owner
    editor.remove_component(hub)
    arcs = {owner: [] for owner in (kept, merged)}
    for name, owner in tags.items():
        marker = editor.markers.pop(name)
        if marker.edge not in arcs[owner]:
            arcs[owner].append(marker.edge)
    for first in arcs[kept]:
        for second in arcs[merged]:
            pairs = editor.common_face_sides(first, second)
            if not pairs:
                continue
            side, other_side = next(((s1, s2) for s1, s2 in pairs if s1 is s2), pairs[0])
            sign = 1
            if side is not other_side:
                editor.reverse_component(merged)
                sign = -1
            editor.splice(first, second, side)
            return editor, sign
    raise PatternMismatch(kind, f"no face joins the arcs of {kept} and {merged} through {hub}")


def composite_a(d: HandleDiagram, dotted: str, kept: str, merged: str) -> HandleDiagram:
    """Slide ``kept`` over ``merged``, then cancel ``merged`` against ``dotted``.

    ``dotted`` must be crossed by the two framed handles only, each passing
    through it geometrically once.  The surviving handle gets framing
    f1 + f2 + 2·ε·lk(h1, h2).
    """
    role = _role(d, dotted)
    first, second = _role(d, kept), _role(d, merged)
    if not role.is_dotted:
        raise PatternMismatch("CompositeA", f"{dotted} is not a dotted circle")
    if not (first.is_framed and second.is_framed) or kept == merged:
        raise PatternMismatch("CompositeA", f"{kept} and {merged} must be two framed handles")
    _threaded_once(d, dotted, (kept, merged), "CompositeA")
    linking = linking_number(d, kept, merged)
    editor, sign = _sum_through(d, dotted, kept, merged, "CompositeA")
    editor.set_role(kept, ComponentRole.framed(first.framing + second.framing + 2 * sign * linking))
    return editor.to_diagram()


def composite_b(d: HandleDiagram, kept: str, merged: str, handle: str) -> HandleDiagram:
    """Slide ``merged`` over ``kept``, then cancel the 0-framed ``handle`` joining them.

    ``handle`` passes geometrically once through each dotted circle and
    crosses nothing else; strands through ``merged`` end up passing through
    the surviving circle.
    """
    role = _role(d, handle)
    if not (_role(d, kept).is_dotted and _role(d, merged).is_dotted) or kept == merged:
        raise PatternMismatch("CompositeB", f"{kept} and {merged} must be two dotted circles")
    if role != ComponentRole.framed(0):
        raise PatternMismatch("CompositeB", f"{handle} is not a 0-framed 2-handle")
    _threaded_once(d, handle, (kept, merged), "CompositeB")
    editor, _ = _sum_through(d, handle, kept, merged, "CompositeB")
    return editor.to_diagram()


def unwind(d: HandleDiagram, dotted: str, framed: str) -> HandleDiagram:
    """Pull ``framed`` off ``dotted`` by removing every reducible bigon between the two."""
    if not _role(d, dotted).is_dotted:
        raise PreconditionFailed("Unwind", f"{dotted} is not a dotted circle")
    _role(d, framed)
    editor = DiagramEditor.from_diagram(d)
    owners = {dotted, framed}
    if not editor.reducible_bigons(owners):
        raise PreconditionFailed("Unwind", f"{framed} and {dotted} bound no reducible bigon")
    while True:
        bigons = editor.reducible_bigons(owners)
        if not bigons:
            return editor.to_diagram()
        editor.remove_bigon(bigons[0])