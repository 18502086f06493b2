"""
Diagrams drawn as a stack of Morse events.

Strands run upwards between levels.  A ``cup`` opens two strands, a ``cap``
closes two neighbours and ``cross`` crosses the strands at positions i and
i+1.  ``'/'`` puts the strand from bottom-left to top-right over, ``'\\'``
puts it under.  A component is oriented by its first cup: with orientation +1
the left leg runs down into the cup and the right leg runs up out of it.
"""

import typing

import attr
from eliot import ActionType, Field

from ribbonkirby.diagram.model import (
    Component,
    ComponentRole,
    Geometry,
    HandleDiagram,
    Marker,
    Side,
    crossing_from_rays,
)
from ribbonkirby.errors import BadParameter

BUILD_LAYOUT = ActionType(
    "ribbonkirby:construct:morse_build",
    [Field("events", int, "The number of Morse events")],
    [
        Field("crossings", int, "The number of crossings"),
        Field("components", int, "The number of components"),
    ],
)

Port = typing.Tuple[int, int]
Event = typing.Tuple[typing.Any, ...]

# crossing ports, counterclockwise
BOTTOM_LEFT, BOTTOM_RIGHT, TOP_RIGHT, TOP_LEFT = range(4)


@attr.s(auto_attribs=True)
class _Strand:
    start: Port
    points: typing.List[typing.Tuple[float, float]]
    tags: typing.List[str] = attr.ib(factory=list)


@attr.s(auto_attribs=True, frozen=True)
class MorseLayout:
    """A built diagram with the edge labels of its tagged strands."""

    diagram: HandleDiagram
    tags: typing.Mapping[str, int]
    events: typing.Tuple[Event, ...]

    def edge(self, tag: str) -> int:
        return self.tags[tag]


@attr.s(eq=False)
class MorseBuilder:
    events: typing.List[Event] = attr.ib(factory=list)
    roles: typing.Dict[str, ComponentRole] = attr.ib(factory=dict)
    markers: typing.List[typing.Tuple[str, str, Side]] = attr.ib(factory=list)
    _kinds: typing.List[str] = attr.ib(factory=list)
    _points: typing.List[typing.Tuple[float, float]] = attr.ib(factory=list)
    _cups: typing.List[typing.Tuple[int, str, int]] = attr.ib(factory=list)
    _links: typing.Dict[Port, Port] = attr.ib(factory=dict)
    _shapes: typing.Dict[Port, typing.List[typing.Tuple[float, float]]] = attr.ib(factory=dict)
    _link_tags: typing.Dict[Port, typing.List[str]] = attr.ib(factory=dict)
    _open: typing.List[_Strand] = attr.ib(factory=list)

    @classmethod
    def from_events(cls, events: typing.Iterable[typing.Sequence], roles=None, markers=()) -> "MorseBuilder":
        builder = cls()
        for event in events:
            kind, *arguments = event
            getattr(builder, kind)(*arguments)
        for component_id, role in (roles or {}).items():
            builder.role(component_id, role)
        for marker in markers:
            builder.mark(*marker)
        return builder

    @property
    def width(self) -> int:
        return len(self._open)

    @property
    def level(self) -> int:
        return len(self.events)

    def _node(self, kind: str, x: float) -> int:
        self._kinds.append(kind)
        self._points.append((x, float(self.level)))
        return len(self._kinds) - 1

    def _advance(self, skip: typing.Container[int] = ()):
        for position, strand in enumerate(self._open):
            if position not in skip:
                strand.points.append((float(position), float(self.level)))

    def _close(self, strand: _Strand, end: Port):
        self._links[strand.start] = end
        self._links[end] = strand.start
        point = self._points[end[0]]
        self._shapes[strand.start] = strand.points + [point]
        self._shapes[end] = list(reversed(self._shapes[strand.start]))
        self._link_tags[strand.start] = self._link_tags[end] = strand.tags

    def _check(self, position: int, span: int):
        if not 0 <= position <= self.width - span:
            raise BadParameter(f"position {position} is outside of the {self.width} open strands")

    def cup(self, position: int, component: str, orientation: int = 1) -> "MorseBuilder":
        """Open two strands at ``position`` and ``position + 1``."""
        if not 0 <= position <= self.width:
            raise BadParameter(f"cannot open a cup at {position} among {self.width} strands")
        if orientation not in (1, -1):
            raise BadParameter(f"cup orientation must be ±1, got {orientation}")
        self._advance()
        node = self._node("cup", position + 0.5)
        self._cups.append((node, component, orientation))
        x, y = self._points[node]
        new = [_Strand((node, 0), [(x, y)]), _Strand((node, 1), [(x, y)])]
        self._open[position:position] = new
        self.events.append(("cup", position, component, orientation))
        return self

    def cap(self, position: int) -> "MorseBuilder":
        """Close the strands at ``position`` and ``position + 1``."""
        self._check(position, 2)
        self._advance(skip=(position, position + 1))
        node = self._node("cap", position + 0.5)
        left, right = self._open[position:position + 2]
        self._close(left, (node, 0))
        self._close(right, (node, 1))
        del self._open[position:position + 2]
        self.events.append(("cap", position))
        return self

    def cross(self, position: int, over: str) -> "MorseBuilder":
        """Cross the strands at ``position`` and ``position + 1``."""
        self._check(position, 2)
        if over not in ("/", "\\"):
            raise BadParameter(f"a crossing is '/' or '\\\\', got {over!r}")
        self._advance(skip=(position, position + 1))
        node = self._node(over, position + 0.5)
        left, right = self._open[position:position + 2]
        self._close(left, (node, BOTTOM_LEFT))
        self._close(right, (node, BOTTOM_RIGHT))
        point = self._points[node]
        self._open[position:position + 2] = [
            _Strand((node, TOP_LEFT), [point]),
            _Strand((node, TOP_RIGHT), [point]),
        ]
        self.events.append(("cross", position, over))
        return self

    def twist(self, position: int, count: int) -> "MorseBuilder":
        """``|count|`` crossings of two neighbouring strands, '/' for positive count."""
        for _ in range(abs(count)):
            self.cross(position, "/" if count > 0 else "\\")
        return self

    def tag(self, position: int, name: str) -> "MorseBuilder":
        """Name the edge through the strand currently at ``position``."""
        self._check(position, 1)
        self._open[position].tags.append(name)
        self.events.append(("tag", position, name))
        return self

    def role(self, component: str, role: ComponentRole) -> "MorseBuilder":
        self.roles[component] = role
        return self

    def mark(self, name: str, tag: str, side: typing.Union[Side, str] = Side.LEFT) -> "MorseBuilder":
        self.markers.append((name, tag, Side(side)))
        return self

    def _walk(self, start: Port) -> typing.Iterator[typing.Tuple[Port, Port]]:
        """Yield (leaving, arriving) port pairs of the closed curve leaving ``start``."""
        leaving = start
        while True:
            arriving = self._links[leaving]
            yield leaving, arriving
            node, port = arriving
            if self._kinds[node] in ("cup", "cap"):
                leaving = (node, 1 - port)
            else:
                leaving = (node, (port + 2) % 4)
            if leaving == start:
                return

    def build(self) -> MorseLayout:
        if self._open:
            raise BadParameter(f"{len(self._open)} strands are still open")
        with BUILD_LAYOUT(events=len(self.events)) as action:
            owners: typing.Dict[Port, str] = {}
            orientation: typing.Dict[Port, bool] = {}
            labels: typing.Dict[Port, int] = {}
            tags: typing.Dict[str, int] = {}
            components = []
            polylines: typing.Dict[int, typing.List[typing.Tuple[float, float]]] = {}
            next_label = 1
            for cup, component_id, direction in self._cups:
                start = (cup, 1 if direction > 0 else 0)
                if start in owners:
                    if owners[start] != component_id:
                        raise BadParameter(f"cup of {component_id} lies on component {owners[start]}")
                    continue
                if component_id in (c[0] for c in components):
                    raise BadParameter(f"component {component_id} is drawn as two closed curves")
                steps = list(self._walk(start))
                first = next(
                    (i for i, (_, (node, _)) in enumerate(steps) if self._kinds[node] not in ("cup", "cap")), None
                )
                if first is not None:
                    steps = steps[first + 1:] + steps[:first + 1]
                edges = [next_label]
                for leaving, arriving in steps:
                    for port, incoming in ((leaving, False), (arriving, True)):
                        owners[port] = component_id
                        orientation[port] = incoming
                        labels[port] = edges[-1]
                    for tag in self._link_tags.get(leaving, ()):
                        tags[tag] = edges[-1]
                    shape = polylines.setdefault(edges[-1], [])
                    shape.extend(self._shapes[leaving])
                    if self._kinds[arriving[0]] not in ("cup", "cap") and (leaving, arriving) != steps[-1]:
                        edges.append(edges[-1] + 1)
                next_label = edges[-1] + 1
                components.append((component_id, edges))
            crossings = []
            crossing_points = {}
            for node, kind in enumerate(self._kinds):
                if kind in ("cup", "cap"):
                    continue
                rays = [(labels[(node, port)], orientation[(node, port)]) for port in range(4)]
                crossings.append(crossing_from_rays(rays, 1 if kind == "/" else 0))
                crossing_points[len(crossings) - 1] = self._points[node]
            diagram = HandleDiagram(
                crossings=crossings,
                components=[
                    Component(component_id, self.roles.get(component_id, ComponentRole.plain()), edges)
                    for component_id, edges in components
                ],
                markers=[Marker(name, tags[tag], side) for name, tag, side in self.markers],
                geometry=Geometry(
                    {edge: tuple(points) for edge, points in polylines.items()}, crossing_points
                ),
            )
            action.addSuccessFields(crossings=len(crossings), components=len(components))
            return MorseLayout(diagram, tags, tuple(self.events))
