"""
Ribbon disc complements from ribbon moves.

Cutting a ribbon knot along its fine bands leaves an unlink.  The disc
complement is that unlink with a dot on every component and a 0-framed
2-handle around each band.
"""
import typing

import attr
from eliot import ActionType, Field

from ribbonkirby.construct.knots import EXTERIOR, MERIDIAN
from ribbonkirby.diagram.model import ComponentRole, HandleDiagram, Side
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import BadParameter, BandCollision, NotAKnot, NotRibbon, PreconditionFailed, TooLarge
from ribbonkirby.invariants.jones import MAX_CROSSINGS, jones, unlink_value

RIBBON_SURGERY = ActionType(
    "ribbonkirby:construct:ribbon_surgery",
    [
        Field("bands", int, "The number of bands"),
        Field("crossings", int, "Crossings of the knot"),
    ],
    [
        Field("dotted", int, "Dotted circles of the complement"),
        Field("framed", int, "Framed 2-handles of the complement"),
    ],
)

PathStep = typing.Tuple[int, bool]


def _as_path(steps) -> typing.Tuple[PathStep, ...]:
    return tuple((int(edge), bool(over)) for edge, over in steps)


@attr.s(auto_attribs=True, frozen=True)
class BandSpec:
    """A fine band from ``start`` to ``end``.

    The band leaves ``start`` into the face on ``side``, crosses the edges of
    ``path`` in turn (over the ones flagged) and lands on ``end`` from the
    face on its ``side``.
    """

    start: int
    end: int
    side: Side = Side.LEFT
    path: typing.Tuple[PathStep, ...] = attr.ib(converter=_as_path, default=())
    half_twists: int = attr.ib(default=0)

    @half_twists.validator
    def _check_twists(self, attribute, value):
        if value % 2:
            raise BadParameter(f"a band between coherent arcs has an even number of half twists, got {value}")


def _cut(editor: DiagramEditor, band: BandSpec, new_id: str) -> typing.Tuple[int, int]:
    if editor.is_round(band.start) or editor.is_round(band.end):
        raise BandCollision(f"band {band.start}-{band.end} ends on a crossingless circle")
    try:
        tip = editor.push_band(band.start, band.side, band.path)
        split = editor.splice(tip, band.end, band.side, new_id, ComponentRole.plain())
    except PreconditionFailed as e:
        raise BandCollision(e.detail) from e
    if split is None:
        raise NotRibbon(f"band {band.start}-{band.end} joins two components instead of splitting one")
    e1, e2 = tip, band.end
    sign = 1 if band.half_twists > 0 else -1
    for _ in range(abs(band.half_twists) // 2):
        result = editor.clasp(e1, band.side.opposite, e2, band.side.opposite, sign)
        e1, e2 = result.fixed[0], result.finger[2]
    return e1, e2


def verify_unlink(d: HandleDiagram) -> None:
    """Raise NotRibbon unless ``d`` simplifies to a crossingless unlink.

    Greedy curl and bigon removal is tried from both ends of the site list;
    the bracket must agree with the unlink's as well when it is computable.
    """
    reached = []
    for from_end in (False, True):
        editor = DiagramEditor.from_diagram(d)
        editor.reduce_greedily(from_end)
        reached.append(len(editor.crossings))
    if min(reached) > 0:
        raise NotRibbon(f"greedy simplification stops at {min(reached)} crossings")
    if len(d.crossings) <= MAX_CROSSINGS:
        try:
            polynomial = jones(d)
        except TooLarge:
            return
        if polynomial != unlink_value(len(d.components)):
            raise NotRibbon(f"the bracket {polynomial} is not that of a {len(d.components)} component unlink")


def ribbon_surgery(d: HandleDiagram, bands: typing.Sequence[BandSpec]) -> HandleDiagram:
    """Cut a knot along fine bands into dotted circles and ring each band with a 0-framed 2-handle.

    With r bands the result has r + 1 dotted circles ``D1``… and r framed
    handles ``h1``….  The ``meridian`` marker sits on ``D1``, on its exterior
    strand when the knot's ``exterior`` marker is there; that marker is kept.
    """
    if len(d.components) != 1 or not d.components[0].role.is_plain:
        raise NotAKnot(f"ribbon surgery needs a single plain component, got {len(d.components)}")
    ends = [e for band in bands for e in (band.start, band.end)]
    if len(set(ends)) != len(ends):
        raise BandCollision("two bands attach to the same edge")
    with RIBBON_SURGERY(bands=len(bands), crossings=len(d.crossings)) as action:
        editor = DiagramEditor.from_diagram(d)
        editor.rename_component(d.components[0].id, "D1")
        strands = [_cut(editor, band, f"D{j + 2}") for j, band in enumerate(bands)]
        verify_unlink(editor.to_diagram())
        for j, (band, (e1, e2)) in enumerate(zip(bands, strands), start=1):
            ring = editor.add_component(f"h{j}", ComponentRole.framed(0))
            try:
                first = editor.finger(e1, band.side, ring, Side.LEFT, False, True)
                editor.finger(e2, band.side.opposite, first.finger[1], Side.LEFT, False, True)
            except PreconditionFailed as e:
                raise BandCollision(e.detail) from e
        for component_id in list(editor.roles):
            if component_id.startswith("D"):
                editor.set_role(component_id, ComponentRole.dotted())
        exterior = editor.markers.get(EXTERIOR)
        if exterior is not None and editor.owners.get(exterior.edge) == "D1":
            editor.add_marker(MERIDIAN, exterior.edge, exterior.side)
        else:
            editor.add_marker(MERIDIAN, editor.edges_of("D1")[0], Side.LEFT)
        result = attr.evolve(editor.to_diagram(), geometry=None)
        action.addSuccessFields(dotted=len(result.dotted), framed=len(result.framed))
        return result
