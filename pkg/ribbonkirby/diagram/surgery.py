"""
Low level editing of PD diagrams.

:class:`DiagramEditor` is a mutable working copy of a :class:`HandleDiagram`.
Every edit keeps edge labels stable where it can: split edges keep their label
on the first piece, merged edges keep the label of the incoming piece, and
markers follow their labels.
"""

import typing

import attr

from ribbonkirby.diagram.faces import Face, crossing_pieces, trace_faces
from ribbonkirby.diagram.model import (
    Component,
    ComponentRole,
    Crossing,
    Geometry,
    HandleDiagram,
    Marker,
    Side,
    Slot,
    crossing_from_rays,
    slot_is_incoming,
    through_slot,
)
from ribbonkirby.errors import PreconditionFailed, UnknownComponent, UnknownSite

Ray = typing.Tuple[int, bool]


@attr.s(auto_attribs=True, frozen=True)
class FingerResult:
    """Labels produced by a finger move.

    ``fixed`` are the three pieces of the crossed edge and ``finger`` the three
    pieces of the pushed edge, both listed in the order the common face traces
    them; ``west`` is the crossing met first by the finger.
    """

    west: int
    east: int
    fixed: typing.Tuple[int, int, int]
    finger: typing.Tuple[int, int, int]


@attr.s(eq=False)
class DiagramEditor:
    crossings: typing.Dict[int, Crossing] = attr.ib(factory=dict)
    owners: typing.Dict[int, str] = attr.ib(factory=dict)
    roles: typing.Dict[str, ComponentRole] = attr.ib(factory=dict)
    starts: typing.Dict[str, int] = attr.ib(factory=dict)
    markers: typing.Dict[str, Marker] = attr.ib(factory=dict)
    geometry: typing.Optional[Geometry] = attr.ib(default=None)
    edited: bool = attr.ib(default=False)
    _next_edge: int = attr.ib(default=1)
    _next_crossing: int = attr.ib(default=0)

    @classmethod
    def from_diagram(cls, d: HandleDiagram) -> "DiagramEditor":
        editor = cls(
            crossings=dict(enumerate(d.crossings)),
            owners=dict(d.owners),
            roles={c.id: c.role for c in d.components},
            starts={c.id: c.edges[0] for c in d.components if c.edges},
            markers={m.name: m for m in d.markers},
            geometry=d.geometry,
        )
        editor._next_edge = max(d.owners, default=0) + 1
        editor._next_crossing = len(d.crossings)
        return editor

    # lookups

    def slots_of(self, edge: int) -> typing.List[Slot]:
        return [
            (index, slot)
            for index, crossing in self.crossings.items()
            for slot, label in enumerate(crossing.edges)
            if label == edge
        ]

    def _end(self, edge: int, incoming: bool) -> typing.Optional[Slot]:
        for index, slot in self.slots_of(edge):
            if slot_is_incoming(slot, self.crossings[index].sign) == incoming:
                return index, slot
        return None

    def head(self, edge: int) -> typing.Optional[Slot]:
        return self._end(edge, True)

    def tail(self, edge: int) -> typing.Optional[Slot]:
        return self._end(edge, False)

    def is_round(self, edge: int) -> bool:
        return not self.slots_of(edge)

    def successor(self, edge: int) -> int:
        head = self.head(edge)
        if head is None:
            return edge
        index, slot = head
        return self.crossings[index].edges[through_slot(slot)]

    def edges_of(self, component_id: str) -> typing.List[int]:
        """Edges of a component in traversal order."""
        if component_id not in self.roles:
            raise UnknownComponent(component_id)
        start = self.starts.get(component_id)
        if self.owners.get(start) != component_id:
            start = min((e for e, owner in self.owners.items() if owner == component_id), default=None)
            if start is None:
                return []
        cycle = [start]
        edge = self.successor(start)
        while edge != start:
            cycle.append(edge)
            edge = self.successor(edge)
        return cycle

    def owner(self, edge: int) -> str:
        try:
            return self.owners[edge]
        except KeyError:
            raise UnknownSite(f"edge {edge}")

    def strands(self, index: int) -> typing.Tuple[typing.Tuple[int, int], typing.Tuple[int, int]]:
        """Slot pairs (in, out) of the under and over strands of a crossing."""
        return (0, 2), ((3, 1) if self.crossings[index].sign > 0 else (1, 3))

    # primitive edits

    def _touch(self):
        self.edited = True

    def new_edge(self, owner: str) -> int:
        edge = self._next_edge
        self._next_edge += 1
        self.owners[edge] = owner
        return edge

    def add_component(self, component_id: str, role: ComponentRole, round_edge: bool = True) -> int:
        """Register a component; with ``round_edge`` it starts as a crossingless circle."""
        if component_id in self.roles:
            raise ValueError(f"component {component_id} already exists")
        self._touch()
        self.roles[component_id] = role
        if not round_edge:
            return 0
        edge = self.new_edge(component_id)
        self.starts[component_id] = edge
        return edge

    def set_slot(self, slot: Slot, edge: int):
        index, position = slot
        edges = list(self.crossings[index].edges)
        edges[position] = edge
        self.crossings[index] = attr.evolve(self.crossings[index], edges=edges)

    def split(self, edge: int, count: int) -> typing.List[int]:
        """Cut ``edge`` at ``count`` new points; return the pieces in orientation order.

        A round edge is cut into ``count`` arcs, so its first and last pieces coincide.
        """
        owner = self.owner(edge)
        self._touch()
        head = self.head(edge)
        if head is None:
            return [edge] + [self.new_edge(owner) for _ in range(count - 1)] + [edge]
        pieces = [edge] + [self.new_edge(owner) for _ in range(count)]
        self.set_slot(head, pieces[-1])
        return pieces

    def add_crossing(self, rays: typing.Sequence[Ray], under: int) -> int:
        index = self._next_crossing
        self._next_crossing += 1
        self.crossings[index] = crossing_from_rays(rays, under)
        self._touch()
        return index

    def _relabel(self, old: int, new: int):
        for index in list(self.crossings):
            if old in self.crossings[index].edges:
                self.crossings[index] = attr.evolve(
                    self.crossings[index], edges=[new if e == old else e for e in self.crossings[index].edges]
                )
        owner = self.owners.pop(old)
        if self.starts.get(owner) == old:
            self.starts[owner] = new
        for name, marker in list(self.markers.items()):
            if marker.edge == old:
                self.markers[name] = attr.evolve(marker, edge=new)

    def remove_crossing(self, index: int):
        """Delete a crossing, joining each strand's incoming and outgoing edges."""
        crossing = self.crossings.pop(index)
        self._touch()
        labels = list(crossing.edges)
        under, over = (0, 2), ((3, 1) if crossing.sign > 0 else (1, 3))
        for in_slot, out_slot in (under, over):
            incoming, outgoing = labels[in_slot], labels[out_slot]
            if incoming == outgoing:
                continue
            self._relabel(outgoing, incoming)
            labels = [incoming if e == outgoing else e for e in labels]

    def remove_component(self, component_id: str):
        """Delete a component, joining the strands that crossed it."""
        if component_id not in self.roles:
            raise UnknownComponent(component_id)
        for index in sorted(self.crossings):
            if index in self.crossings and any(
                self.owners.get(e) == component_id for e in self.crossings[index].edges
            ):
                self.remove_crossing(index)
        for edge in [e for e, owner in self.owners.items() if owner == component_id]:
            del self.owners[edge]
        for name in [n for n, m in self.markers.items() if m.edge not in self.owners]:
            del self.markers[name]
        del self.roles[component_id]
        self.starts.pop(component_id, None)
        self._touch()

    def rename_component(self, old: str, new: str, role: typing.Optional[ComponentRole] = None):
        if new != old and new in self.roles:
            raise ValueError(f"component {new} already exists")
        self.roles = {
            (new if key == old else key): (role or value) if key == old else value
            for key, value in self.roles.items()
        }
        for edge, owner in self.owners.items():
            if owner == old:
                self.owners[edge] = new
        if old in self.starts:
            self.starts[new] = self.starts.pop(old)
        self._touch()

    def set_role(self, component_id: str, role: ComponentRole):
        if component_id not in self.roles:
            raise UnknownComponent(component_id)
        self.roles[component_id] = role
        self._touch()

    def reverse_component(self, component_id: str):
        edges = set(self.edges_of(component_id))
        for index, crossing in list(self.crossings.items()):
            a, b, c, d = crossing.edges
            under_flips = a in edges
            over_flips = crossing.over[0] in edges
            if not (under_flips or over_flips):
                continue
            self.crossings[index] = Crossing(
                (c, d, a, b) if under_flips else (a, b, c, d),
                crossing.sign if under_flips == over_flips else -crossing.sign,
            )
        for name, marker in list(self.markers.items()):
            if marker.edge in edges:
                self.markers[name] = attr.evolve(marker, side=marker.side.opposite)
        self._touch()

    def add_marker(self, name: str, edge: int, side: Side = Side.LEFT):
        self.owner(edge)
        self.markers[name] = Marker(name, edge, side)

    # faces

    def faces(self):
        return trace_faces(self.crossings)

    def _piece_of(self, edge: int) -> typing.Optional[typing.FrozenSet[int]]:
        slots = self.slots_of(edge)
        if not slots:
            return None
        for piece in crossing_pieces(self.crossings):
            if slots[0][0] in piece:
                return frozenset(piece)
        return None

    def check_common_face(self, e1: int, side1: Side, e2: int, side2: Side):
        """Require the face beside e1 and the face beside e2 to be one face.

        Edges of different connected pieces always qualify: one piece can be
        drawn inside any face of the other.
        """
        piece = self._piece_of(e1)
        if piece is None or piece != self._piece_of(e2):
            return
        table = {index: self.crossings[index] for index in piece}
        for face in trace_faces(table):
            if (e1, side1.direction) in face.sides:
                if (e2, side2.direction) not in face.sides:
                    raise PreconditionFailed(
                        "Face", f"edge {e2} ({side2.value}) does not border the face {side1.value} of edge {e1}"
                    )
                return
        raise UnknownSite(f"edge {e1}")

    # composite edits

    def finger(
        self,
        fixed: int,
        fixed_side: Side,
        pushed: int,
        pushed_side: Side,
        pushed_over_west: bool,
        pushed_over_east: bool,
    ) -> FingerResult:
        """Push a finger of ``pushed`` across ``fixed`` through their common face.

        Seen with the face north of ``fixed``, the finger descends at the west
        crossing and returns at the east one.  Equal over flags give a
        Reidemeister II pair; different flags give a clasp.
        """
        if fixed == pushed:
            raise PreconditionFailed("Face", f"edge {fixed} cannot cross itself by a finger move")
        self.check_common_face(fixed, fixed_side, pushed, pushed_side)
        d1, d2 = fixed_side.direction, pushed_side.direction
        f = self.split(fixed, 2)
        g = self.split(pushed, 2)
        f0, f1, f2 = f if d1 > 0 else f[::-1]
        g0, g1, g2 = g if d2 > 0 else g[::-1]
        west = self.add_crossing(
            [(f1, d1 > 0), (g0, d2 > 0), (f2, d1 < 0), (g1, d2 < 0)], 0 if pushed_over_west else 1
        )
        east = self.add_crossing(
            [(f0, d1 > 0), (g2, d2 < 0), (f1, d1 < 0), (g1, d2 > 0)], 0 if pushed_over_east else 1
        )
        return FingerResult(west, east, (f0, f1, f2), (g0, g1, g2))

    def splice(
        self,
        e1: int,
        e2: int,
        side: Side,
        new_component: typing.Optional[str] = None,
        new_role: typing.Optional[ComponentRole] = None,
    ) -> typing.Optional[str]:
        """Band-sum two coherently oriented edges across the face on ``side`` of both.

        Joining two components keeps the component of ``e1``.  Splitting one
        component gives the piece through ``e2`` the id ``new_component``,
        which is returned.
        """
        if e1 == e2:
            raise PreconditionFailed("Splice", f"edge {e1} cannot be spliced with itself")
        self.check_common_face(e1, side, e2, side)
        first, second = self.owner(e1), self.owner(e2)
        round_edges = [e for e in (e1, e2) if self.is_round(e)]
        if round_edges:
            if first == second:
                raise PreconditionFailed("Splice", "a round circle has a single edge")
            gone = round_edges[-1]
            kept = e1 if gone == e2 else e2
            gone_owner = second if gone == e2 else first
            role = self.roles[first]
            self._relabel(gone, kept)
            del self.roles[gone_owner]
            self.starts.pop(gone_owner, None)
            if gone_owner == first:
                self.rename_component(second, first, role)
            return None
        ends = []
        for edge in (e1, e2):
            end = self.head(edge) if side.direction > 0 else self.tail(edge)
            ends.append(end)
        self.set_slot(ends[0], e2)
        self.set_slot(ends[1], e1)
        self._touch()
        if first != second:
            for edge, owner in self.owners.items():
                if owner == second:
                    self.owners[edge] = first
            del self.roles[second]
            self.starts.pop(second, None)
            return None
        cycle = self.edges_of_cycle(e2)
        if e1 in cycle:
            raise PreconditionFailed("Splice", "splicing one component with itself must split it")
        if new_component is None:
            raise ValueError("splitting a component needs a new component id")
        self.roles[new_component] = new_role or self.roles[first]
        for edge in cycle:
            self.owners[edge] = new_component
        self.starts[new_component] = e2
        if self.starts.get(first) in cycle:
            self.starts[first] = e1
        return new_component

    def edges_of_cycle(self, start: int) -> typing.List[int]:
        cycle = [start]
        edge = self.successor(start)
        while edge != start:
            cycle.append(edge)
            edge = self.successor(edge)
        return cycle

    def kink(self, edge: int, side: Side, sign: int) -> int:
        """Add a Reidemeister I curl of the given sign on ``side`` of ``edge``."""
        first, loop, last = self.split(edge, 2)
        if side is Side.LEFT:
            rays = [(first, True), (last, False), (loop, False), (loop, True)]
            under = 0 if sign > 0 else 1
        else:
            rays = [(first, True), (loop, True), (loop, False), (last, False)]
            under = 1 if sign > 0 else 0
        return self.add_crossing(rays, under)

    def switch(self, index: int):
        """Exchange the over and under strands of a crossing."""
        self.crossings[index] = self.crossings[index].mirrored()
        self._touch()

    def face_beside(self, edge: int, side: Side):
        """The face on ``side`` of ``edge``, or None for a round edge."""
        piece = self._piece_of(edge)
        if piece is None:
            return None
        for face in trace_faces({index: self.crossings[index] for index in piece}):
            if (edge, side.direction) in face.sides:
                return face
        raise UnknownSite(f"edge {edge}")

    def common_face_sides(self, e1: int, e2: int) -> typing.List[typing.Tuple[Side, Side]]:
        """Side pairs (of e1, of e2) under which both edges border one face."""
        piece = self._piece_of(e1)
        if piece is None or piece != self._piece_of(e2):
            return [(s1, s2) for s1 in (Side.LEFT, Side.RIGHT) for s2 in (Side.LEFT, Side.RIGHT)]
        found = []
        for face in trace_faces({index: self.crossings[index] for index in piece}):
            for edge, direction in face.sides:
                if edge != e1:
                    continue
                for other, other_direction in face.sides:
                    pair = (Side.of_direction(direction), Side.of_direction(other_direction))
                    if other == e2 and pair not in found:
                        found.append(pair)
        return found

    def _double_crossing(self, index: int, doubled: typing.Set[int], twin: typing.Dict[int, int], side: Side):
        crossing = self.crossings.pop(index)
        a, b, c, d = crossing.edges
        # the under strand runs north; the over strand runs west when it enters at slot 1
        westwards = crossing.sign < 0
        verticals = [(0, a, c, self.owners[a])]
        if a in doubled:
            verticals.append((-1 if side is Side.LEFT else 1, twin[a], twin[c], self.owners[twin[a]]))
        horizontals = [(0, d, b, self.owners[b])]
        if b in doubled:
            north = (not westwards) == (side is Side.LEFT)
            horizontals.append((1 if north else -1, twin[d], twin[b], self.owners[twin[b]]))
        verticals.sort()
        horizontals.sort()
        columns = {}
        for x, south, north_edge, owner in verticals:
            columns[x] = [south] + [self.new_edge(owner) for _ in horizontals[1:]] + [north_edge]
        rows = {}
        for y, west, east, owner in horizontals:
            rows[y] = [west] + [self.new_edge(owner) for _ in verticals[1:]] + [east]
        for i, (x, *_) in enumerate(verticals):
            for j, (y, *_) in enumerate(horizontals):
                rays = [
                    (columns[x][j], True),
                    (rows[y][i + 1], westwards),
                    (columns[x][j + 1], False),
                    (rows[y][i], not westwards),
                ]
                self.add_crossing(rays, 0)

    def parallel_pushoff(
        self, component_id: str, side: Side, new_id: str, role: typing.Optional[ComponentRole] = None
    ) -> typing.Dict[int, int]:
        """Add a blackboard parallel copy of a component on ``side`` of it.

        Returns the map from each edge of the component to the parallel edge
        beside it; the two border a common strip face.
        """
        edges = self.edges_of(component_id)
        if new_id in self.roles:
            raise ValueError(f"component {new_id} already exists")
        self.roles[new_id] = role or self.roles[component_id]
        twin = {edge: self.new_edge(new_id) for edge in edges}
        self.starts[new_id] = twin[edges[0]]
        doubled = set(edges)
        for index in [i for i, c in self.crossings.items() if doubled & set(c.edges)]:
            self._double_crossing(index, doubled, twin, side)
        self._touch()
        return twin

    def clasp(self, fixed: int, fixed_side: Side, pushed: int, pushed_side: Side, sign: int) -> FingerResult:
        """A finger clasp whose two crossings both have the given sign."""
        result = self.finger(fixed, fixed_side, pushed, pushed_side, True, False)
        if self.crossings[result.west].sign != sign:
            self.switch(result.west)
            self.switch(result.east)
        return result

    def twist_parallel(self, edge: int, twin: int, side: Side, count: int) -> typing.Tuple[int, int]:
        """Clasp ``twin`` around the parallel ``edge`` |count| times, changing their linking by ``count``.

        Returns the pieces of ``edge`` and ``twin`` that still border their
        outer faces on the original sides.
        """
        sign = 1 if count > 0 else -1
        for _ in range(abs(count)):
            result = self.clasp(edge, side, twin, side.opposite, sign)
            edge, twin = result.fixed[0], result.finger[2]
        return edge, twin

    def push_band(self, start: int, side: Side, path: typing.Sequence[typing.Tuple[int, bool]]) -> int:
        """Push a finger of ``start`` across each edge of ``path`` in turn.

        ``path`` lists (edge, over) pairs; the finger passes over the edge when
        ``over`` is set.  The returned tip edge borders the last face reached,
        on ``side``.
        """
        tip = start
        for edge, over in path:
            fixed_side = next(
                (s1 for s1, s2 in self.common_face_sides(edge, tip) if s2 is side), None
            )
            if fixed_side is None:
                raise PreconditionFailed("Band", f"edge {edge} does not border the face beside edge {tip}")
            tip = self.finger(edge, fixed_side, tip, side, over, over).finger[1]
        return tip

    def triangle_move(self, face: Face) -> typing.List[int]:
        """Pass one strand of a triangular face across the crossing of the other two."""
        if len(face) != 3:
            raise PreconditionFailed("R3", f"the face has {len(face)} sides, not 3")
        corners = list(face.corners)
        sides = [self.crossings[index].edges[(i + 1) % 4] for index, i in corners]
        if len({index for index, _ in corners}) != 3 or len(set(sides)) != 3:
            raise PreconditionFailed("R3", "the triangle repeats a crossing or an edge")

        def ray(corner, offset):
            index, i = corner
            slot = (i + offset) % 4
            crossing = self.crossings[index]
            return (crossing.edges[slot], slot_is_incoming(slot, crossing.sign)), slot % 2 == 0

        (r0, u0), (r1, u1) = ray(corners[2], 2), ray(corners[2], 3)
        (r2, u2), (r3, u3) = ray(corners[1], 2), ray(corners[1], 3)
        (r4, u4), (r5, u5) = ray(corners[0], 2), ray(corners[0], 3)
        # strands s0 = (r2, r5), s1 = (r0, r3), s2 = (r1, r4); sides[j] is the middle of s_j
        if all(a or b for a, b in ((u2, u5), (u0, u3), (u1, u4))):
            raise PreconditionFailed("R3", "no strand of the triangle passes over both others")
        for index, _ in corners:
            del self.crossings[index]
        self._touch()
        return [
            self.add_crossing([r1, r2, (sides[2], not r1[1]), (sides[0], not r2[1])], 0 if u4 else 1),
            self.add_crossing([r5, r0, (sides[0], not r5[1]), (sides[1], not r0[1])], 0 if u2 else 1),
            self.add_crossing([r3, r4, (sides[1], not r3[1]), (sides[2], not r4[1])], 0 if u0 else 1),
        ]

    # reductions

    def monogons(self) -> typing.List[int]:
        """Crossings that close a face of length one."""
        return [face.corners[0][0] for face in self.faces() if len(face) == 1]

    def reducible_bigons(self, owners: typing.Optional[typing.Collection[str]] = None) -> typing.List[Face]:
        """Bigon faces whose strands can be pulled apart by an inverse Reidemeister II move.

        With ``owners``, both sides of the bigon must belong to those components.
        """
        found = []
        for face in self.faces():
            if len(face) != 2:
                continue
            (first, i), (second, j) = face.corners
            (e1, _), (e2, _) = face.sides
            if first == second or e1 == e2:
                continue
            if owners is not None and not {self.owners[e1], self.owners[e2]} <= set(owners):
                continue
            if ((i + 1) % 2 == 0) == (j % 2 == 0):
                found.append(face)
        return found

    def remove_bigon(self, face: Face):
        (first, _), (second, _) = face.corners
        self.remove_crossing(first)
        self.remove_crossing(second)

    def reduce_greedily(self, from_end: bool = False) -> int:
        """Remove curls and reducible bigons until none is left; return the crossings removed."""
        before = len(self.crossings)
        while True:
            curls = self.monogons()
            if curls:
                self.remove_crossing(curls[-1] if from_end else curls[0])
                continue
            bigons = self.reducible_bigons()
            if not bigons:
                return before - len(self.crossings)
            self.remove_bigon(bigons[-1] if from_end else bigons[0])

    def disjoint_union(self, other: HandleDiagram) -> typing.Dict[int, int]:
        """Place ``other`` beside this diagram and return its edge relabeling."""
        clashes = {c.id for c in other.components} & set(self.roles)
        if clashes:
            raise ValueError(f"component ids {sorted(clashes)} are used twice")
        name_clashes = {m.name for m in other.markers} & set(self.markers)
        if name_clashes:
            raise ValueError(f"markers {sorted(name_clashes)} are used twice")
        offset = self._next_edge - min(other.owners, default=1)
        relabel = {edge: edge + offset for edge in other.owners}
        for crossing in other.crossings:
            self.crossings[self._next_crossing] = Crossing([relabel[e] for e in crossing.edges], crossing.sign)
            self._next_crossing += 1
        for component in other.components:
            self.roles[component.id] = component.role
            self.starts[component.id] = relabel[component.edges[0]]
            for edge in component.edges:
                self.owners[relabel[edge]] = component.id
        for marker in other.markers:
            self.markers[marker.name] = attr.evolve(marker, edge=relabel[marker.edge])
        self._next_edge = max(relabel.values(), default=self._next_edge) + 1
        self._touch()
        return relabel

    def to_diagram(self) -> HandleDiagram:
        components = [
            Component(component_id, role, self.edges_of(component_id))
            for component_id, role in self.roles.items()
        ]
        covered = sum(len(c.edges) for c in components)
        if covered != len(self.owners):
            raise ValueError("component cycles do not cover every edge")
        geometry = self.geometry
        if geometry is not None and self.edited:
            geometry = geometry.marked_stale()
        return HandleDiagram(
            crossings=[self.crossings[index] for index in sorted(self.crossings)],
            components=[c for c in components if c.edges],
            markers=list(self.markers.values()),
            geometry=geometry,
        )
