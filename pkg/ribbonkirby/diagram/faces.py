"""Face tracing on the rotation system given by PD crossings."""
import typing

import attr
from networkx import Graph, connected_components

from ribbonkirby.diagram.model import Crossing, HandleDiagram, Side, Slot, slot_is_incoming
from ribbonkirby.errors import Disconnected

Corner = typing.Tuple[int, int]
CrossingTable = typing.Mapping[int, Crossing]


@attr.s(auto_attribs=True, frozen=True)
class Face:
    """A face boundary traced with the face on the right.

    ``corners`` are ``(crossing, i)`` pairs, the corner between slot i and
    slot i+1; ``sides`` are ``(edge, direction)`` pairs where direction is +1
    when the trace follows the edge orientation.
    """

    corners: typing.Tuple[Corner, ...] = attr.ib(converter=tuple)
    sides: typing.Tuple[typing.Tuple[int, int], ...] = attr.ib(converter=tuple)

    def __len__(self) -> int:
        return len(self.sides)

    def edges(self) -> typing.Set[int]:
        return {edge for edge, _ in self.sides}

    def direction_of(self, edge: int) -> typing.Optional[int]:
        return next((direction for e, direction in self.sides if e == edge), None)


def _slot_index(table: CrossingTable) -> typing.Dict[int, typing.List[Slot]]:
    found: typing.Dict[int, typing.List[Slot]] = {}
    for index, crossing in table.items():
        for slot, edge in enumerate(crossing.edges):
            found.setdefault(edge, []).append((index, slot))
    return found


def _other_end(slots: typing.Dict[int, typing.List[Slot]], edge: int, here: Slot) -> Slot:
    ends = slots[edge]
    if len(ends) != 2:
        raise ValueError(f"edge {edge} has {len(ends)} ends")
    return ends[1] if ends[0] == here else ends[0]


def trace_faces(table: CrossingTable) -> typing.List[Face]:
    """All faces of the crossings in ``table``; edges must pair up within it."""
    slots = _slot_index(table)
    seen: typing.Set[Corner] = set()
    traced = []
    for start in sorted((index, i) for index in table for i in range(4)):
        if start in seen:
            continue
        corners, sides = [], []
        corner = start
        while corner not in seen:
            seen.add(corner)
            corners.append(corner)
            index, i = corner
            leaving = (index, (i + 1) % 4)
            edge = table[index].edges[leaving[1]]
            direction = -1 if slot_is_incoming(leaving[1], table[index].sign) else 1
            sides.append((edge, direction))
            corner = _other_end(slots, edge, leaving)
        traced.append(Face(corners, sides))
    return traced


def crossing_pieces(table: CrossingTable) -> typing.List[typing.Set[int]]:
    """Crossings grouped into connected pieces of the projection."""
    graph = Graph()
    graph.add_nodes_from(table)
    for edge, ends in _slot_index(table).items():
        if len(ends) == 2:
            graph.add_edge(ends[0][0], ends[1][0])
    return [set(piece) for piece in connected_components(graph)]


def euler_characteristics(table: CrossingTable) -> typing.List[typing.Tuple[int, int, int]]:
    """(V, E, F) for every connected piece."""
    counts = []
    for piece in crossing_pieces(table):
        sub = {index: table[index] for index in piece}
        counts.append((len(sub), 2 * len(sub), len(trace_faces(sub))))
    return counts


def round_faces(edge: int) -> typing.List[Face]:
    return [Face((), ((edge, 1),)), Face((), ((edge, -1),))]


def faces(d: HandleDiagram) -> typing.List[Face]:
    """Faces of a connected diagram."""
    round_edges = [edge for edge in d.edges if edge not in d.occurrences]
    table = dict(enumerate(d.crossings))
    piece_count = len(crossing_pieces(table)) + len(round_edges)
    if piece_count > 1:
        raise Disconnected(f"the diagram has {piece_count} connected pieces")
    if round_edges:
        return round_faces(round_edges[0])
    return trace_faces(table)


def face_beside(table: CrossingTable, edge: int, side: Side) -> Face:
    """The face on the given side of an edge in the piece containing it."""
    for face in trace_faces(table):
        if (edge, side.direction) in face.sides:
            return face
    raise KeyError(edge)
