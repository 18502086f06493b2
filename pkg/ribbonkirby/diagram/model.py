"""
Planar handle diagrams stored as oriented PD codes.

A crossing lists its four edges counterclockwise starting at the incoming
under-edge.  The under strand runs from slot 0 to slot 2; the over strand runs
from slot 3 to slot 1 at a positive crossing and from slot 1 to slot 3 at a
negative one.
"""

import typing
from enum import Enum

import attr
from cached_property import cached_property

from ribbonkirby.errors import UnknownComponent

Slot = typing.Tuple[int, int]
Point = typing.Tuple[float, float]


def slot_is_incoming(slot: int, sign: int) -> bool:
    """Whether the edge at ``slot`` arrives at a crossing of the given sign."""
    if slot == 0:
        return True
    if slot == 2:
        return False
    return (slot == 3) == (sign > 0)


def through_slot(slot: int) -> int:
    """The slot a strand continues to on the other side of the crossing."""
    return (slot + 2) % 4


@attr.s(auto_attribs=True, frozen=True)
class Crossing:
    edges: typing.Tuple[int, int, int, int] = attr.ib(converter=tuple)
    sign: int = attr.ib(default=1)

    @edges.validator
    def _check_edges(self, attribute, value):
        if len(value) != 4:
            raise ValueError(f"a crossing has four edges, got {value}")

    @sign.validator
    def _check_sign(self, attribute, value):
        if value not in (1, -1):
            raise ValueError(f"a crossing sign is ±1, got {value}")

    @property
    def under(self) -> typing.Tuple[int, int]:
        """The incoming and outgoing under-edges."""
        return self.edges[0], self.edges[2]

    @property
    def over(self) -> typing.Tuple[int, int]:
        """The incoming and outgoing over-edges."""
        a, b, c, d = self.edges
        return (d, b) if self.sign > 0 else (b, d)

    def mirrored(self) -> "Crossing":
        a, b, c, d = self.edges
        if self.sign > 0:
            return Crossing((d, a, b, c), -1)
        return Crossing((b, c, d, a), 1)


def crossing_from_rays(rays: typing.Sequence[typing.Tuple[int, bool]], under: int) -> Crossing:
    """Build a crossing from its four rays listed counterclockwise.

    ``rays`` are ``(edge, incoming)`` pairs; ``under`` is 0 when rays 0 and 2
    form the under strand and 1 when rays 1 and 3 do.
    """
    starts = [i for i in (under, under + 2) if rays[i][1]]
    overs = [i for i in (under + 1, (under + 3) % 4) if rays[i][1]]
    if len(starts) != 1 or len(overs) != 1:
        raise ValueError(f"each strand needs one incoming ray: {rays}")
    first = starts[0]
    edges = [rays[(first + i) % 4][0] for i in range(4)]
    return Crossing(edges, 1 if rays[(first + 3) % 4][1] else -1)


class RoleKind(Enum):
    DOTTED = "dotted"
    FRAMED = "framed"
    PLAIN = "plain"


@attr.s(auto_attribs=True, frozen=True)
class ComponentRole:
    """Dotted 1-handle, integer framed 2-handle or plain knot component."""

    kind: RoleKind
    framing: typing.Optional[int] = None

    def __attrs_post_init__(self):
        if (self.kind is RoleKind.FRAMED) != (self.framing is not None):
            raise ValueError(f"only framed components carry a framing: {self.kind.value}, {self.framing}")

    @classmethod
    def dotted(cls) -> "ComponentRole":
        return cls(RoleKind.DOTTED)

    @classmethod
    def framed(cls, framing: int = 0) -> "ComponentRole":
        return cls(RoleKind.FRAMED, int(framing))

    @classmethod
    def plain(cls) -> "ComponentRole":
        return cls(RoleKind.PLAIN)

    @classmethod
    def parse(cls, text: str) -> "ComponentRole":
        """Read ``dotted``, ``plain`` or ``framed:<int>``."""
        kind, _, framing = text.partition(":")
        if kind == RoleKind.FRAMED.value:
            return cls.framed(int(framing))
        if framing:
            raise ValueError(f"only framed components carry a framing: {text}")
        return cls(RoleKind(kind))

    @property
    def text(self) -> str:
        return f"framed:{self.framing}" if self.is_framed else self.kind.value

    @property
    def is_dotted(self) -> bool:
        return self.kind is RoleKind.DOTTED

    @property
    def is_framed(self) -> bool:
        return self.kind is RoleKind.FRAMED

    @property
    def is_plain(self) -> bool:
        return self.kind is RoleKind.PLAIN

    def __str__(self) -> str:
        return f"framed({self.framing})" if self.is_framed else self.kind.value


@attr.s(auto_attribs=True, frozen=True)
class Component:
    """An oriented component; ``edges`` lists its edges in traversal order."""

    id: str
    role: ComponentRole
    edges: typing.Tuple[int, ...] = attr.ib(converter=tuple)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def direction(self) -> int:
        """+1 when the face on this side is traced along the edge orientation."""
        return 1 if self is Side.RIGHT else -1

    @property
    def opposite(self) -> "Side":
        return Side.LEFT if self is Side.RIGHT else Side.RIGHT

    @classmethod
    def of_direction(cls, direction: int) -> "Side":
        return cls.RIGHT if direction > 0 else cls.LEFT


@attr.s(auto_attribs=True, frozen=True)
class Marker:
    """A named point on an edge, e.g. the meridian site of a ribbon disc."""

    name: str
    edge: int
    side: Side = Side.LEFT


@attr.s(auto_attribs=True, frozen=True)
class Geometry:
    """Advisory drawing data: one polyline per edge and a point per crossing."""

    polylines: typing.Mapping[int, typing.Tuple[Point, ...]] = attr.ib(factory=dict)
    crossings: typing.Mapping[int, Point] = attr.ib(factory=dict)
    stale: bool = False

    def marked_stale(self) -> "Geometry":
        return attr.evolve(self, stale=True)


@attr.s(auto_attribs=True, frozen=True)
class HandleDiagram:
    crossings: typing.Tuple[Crossing, ...] = attr.ib(converter=tuple, default=())
    components: typing.Tuple[Component, ...] = attr.ib(converter=tuple, default=())
    markers: typing.Tuple[Marker, ...] = attr.ib(converter=tuple, default=())
    geometry: typing.Optional[Geometry] = attr.ib(default=None, eq=False)

    @cached_property
    def occurrences(self) -> typing.Dict[int, typing.List[Slot]]:
        found: typing.Dict[int, typing.List[Slot]] = {}
        for index, crossing in enumerate(self.crossings):
            for slot, edge in enumerate(crossing.edges):
                found.setdefault(edge, []).append((index, slot))
        return found

    @cached_property
    def edge_ends(self) -> typing.Dict[int, typing.Tuple[typing.Optional[Slot], typing.Optional[Slot]]]:
        """Map each edge to its (tail, head) slots; round edges map to (None, None)."""
        ends = {}
        for component in self.components:
            for edge in component.edges:
                tail = head = None
                for index, slot in self.occurrences.get(edge, ()):
                    if slot_is_incoming(slot, self.crossings[index].sign):
                        head = (index, slot)
                    else:
                        tail = (index, slot)
                ends[edge] = (tail, head)
        return ends

    @cached_property
    def owners(self) -> typing.Dict[int, str]:
        return {edge: c.id for c in self.components for edge in c.edges}

    @property
    def edges(self) -> typing.List[int]:
        return [edge for c in self.components for edge in c.edges]

    def component(self, component_id: str) -> Component:
        for component in self.components:
            if component.id == component_id:
                return component
        raise UnknownComponent(component_id)

    def components_with(self, predicate: typing.Callable[[ComponentRole], bool]) -> typing.List[Component]:
        return [c for c in self.components if predicate(c.role)]

    @property
    def dotted(self) -> typing.List[Component]:
        return self.components_with(lambda role: role.is_dotted)

    @property
    def framed(self) -> typing.List[Component]:
        return self.components_with(lambda role: role.is_framed)

    @property
    def plain(self) -> typing.List[Component]:
        return self.components_with(lambda role: role.is_plain)

    def is_round(self, component_id: str) -> bool:
        return all(edge not in self.occurrences for edge in self.component(component_id).edges)

    def crossing_components(self, index: int) -> typing.Tuple[str, str]:
        """Owners of the under and over strands of a crossing."""
        crossing = self.crossings[index]
        return self.owners[crossing.edges[0]], self.owners[crossing.over[0]]

    def marker(self, name: str) -> typing.Optional[Marker]:
        return next((m for m in self.markers if m.name == name), None)

    def with_geometry_stale(self) -> "HandleDiagram":
        if self.geometry is None or self.geometry.stale:
            return self
        return attr.evolve(self, geometry=self.geometry.marked_stale())

    def summary(self) -> typing.Dict[str, int]:
        return {
            "crossings": len(self.crossings),
            "components": len(self.components),
            "dotted": len(self.dotted),
            "framed": len(self.framed),
            "plain": len(self.plain),
        }
