"""Plain knot diagrams: two-bridge torus knots, pretzels and connected sums."""
import attr
from eliot import ActionType, Field

from ribbonkirby.construct.morse import MorseBuilder, MorseLayout
from ribbonkirby.diagram.model import ComponentRole, HandleDiagram, Side
from ribbonkirby.diagram.queries import reverse
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import BadParameter, NotAKnot

#: Marker on an edge bordering the unbounded face; its side faces outwards.
EXTERIOR = "exterior"
#: Marker on a meridian site of a ribbon disc, where Casson chains attach.
MERIDIAN = "meridian"

CONNECTED_SUM = ActionType(
    "ribbonkirby:construct:connected_sum",
    [
        Field("left", int, "Crossings of the first summand"),
        Field("right", int, "Crossings of the second summand"),
    ],
    [Field("crossings", int, "Crossings of the sum")],
)


def unknot(component_id: str = "K", role: ComponentRole = None) -> HandleDiagram:
    """A crossingless circle."""
    editor = DiagramEditor()
    edge = editor.add_component(component_id, role or ComponentRole.plain())
    editor.add_marker(EXTERIOR, edge, Side.RIGHT)
    return attr.evolve(editor.to_diagram(), geometry=None)


def torus_2n_layout(n: int) -> MorseLayout:
    if abs(n) < 3 or n % 2 == 0:
        raise BadParameter(f"T(2,n) needs an odd n with |n| >= 3, got {n}")
    builder = MorseBuilder().cup(0, "K", 1).cup(2, "K", -1).tag(0, EXTERIOR)
    builder.twist(1, n).cap(0).cap(0)
    builder.mark(EXTERIOR, EXTERIOR, Side.RIGHT)
    return builder.build()


def torus_2n(n: int) -> HandleDiagram:
    """The closure of the two strand braid σ₁ⁿ; every crossing has the sign of n."""
    return torus_2n_layout(n).diagram


def _column(builder: MorseBuilder, position: int, twists: int, gap: int, prefix: str):
    for i in range(1, abs(twists) + 1):
        builder.cross(position, "/" if twists > 0 else "\\")
        if i < abs(twists):
            builder.tag(gap, f"{prefix}-gap-{i}")


def pretzel_layout(p: int, q: int, r: int) -> MorseLayout:
    """Three twist columns joined at top and bottom.

    The strands of the third column are tagged ``band-left`` and ``band-right``
    below its twists.  Between consecutive crossings the inner strands of the
    first two columns are tagged ``left-gap-i`` and ``right-gap-i``; they face
    each other across the region between those columns.
    """
    if sum(1 for twists in (p, q, r) if twists % 2 == 0) > 1:
        raise NotAKnot(f"P({p},{q},{r}) is a link")
    builder = MorseBuilder().cup(0, "K", 1).cup(1, "K").cup(3, "K")
    builder.tag(0, EXTERIOR).tag(4, "band-left").tag(5, "band-right")
    _column(builder, 0, p, 1, "left")
    _column(builder, 2, q, 2, "right")
    builder.twist(4, r)
    builder.cap(3).cap(1).cap(0)
    builder.mark(EXTERIOR, EXTERIOR, Side.RIGHT)
    return builder.build()


def pretzel(p: int, q: int, r: int) -> HandleDiagram:
    return pretzel_layout(p, q, r).diagram


def twisted_band_unknot_sum_layout(windings: int, twists: int) -> MorseLayout:
    if windings < 1:
        raise BadParameter(f"the band winds at least once, got {windings}")
    n = 2 * windings + 1
    return pretzel_layout(n, -n, 2 * twists)


def twisted_band_unknot_sum(windings: int, twists: int) -> HandleDiagram:
    """Two unknots joined by a band with ``windings`` full windings and ``twists`` full twists.

    Drawn as the pretzel P(2w+1, -(2w+1), 2k): each twist column closes up to an
    unknot once the band in the third column is cut.
    """
    return twisted_band_unknot_sum_layout(windings, twists).diagram


def _knot(d: HandleDiagram) -> str:
    if len(d.components) != 1 or not d.components[0].role.is_plain:
        raise NotAKnot(f"expected a single plain component, got {len(d.components)} components")
    return d.components[0].id


def _exterior(d: HandleDiagram):
    marker = d.marker(EXTERIOR)
    if marker is None:
        return d.components[0].edges[0], Side.RIGHT
    return marker.edge, marker.side


def connected_sum(d1: HandleDiagram, d2: HandleDiagram) -> HandleDiagram:
    """Join two knots by a band between their exterior arcs."""
    first, second = _knot(d1), _knot(d2)
    with CONNECTED_SUM(left=len(d1.crossings), right=len(d2.crossings)) as action:
        if _exterior(d1)[1] != _exterior(d2)[1]:
            d2 = reverse(d2, second)
        right = DiagramEditor.from_diagram(d2)
        right.rename_component(second, "K2")
        right.markers.clear()
        editor = DiagramEditor.from_diagram(d1)
        editor.rename_component(first, "K")
        edge, side = _exterior(d1)
        relabel = editor.disjoint_union(right.to_diagram())
        editor.splice(edge, relabel[_exterior(d2)[0]], side)
        result = attr.evolve(editor.to_diagram(), geometry=None)
        action.addSuccessFields(crossings=len(result.crossings))
        return result
