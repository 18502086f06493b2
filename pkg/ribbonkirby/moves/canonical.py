"""
Canonical strings of labeled diagrams.

Every connected piece is walked breadth first from each of its darts, a
dart being a crossing together with the slot the walk enters it by.
Crossings are numbered in discovery order and slots are read
counterclockwise from the entry slot, so the code is independent of edge
labels, crossing order and component ids.  The smallest code over all darts
names the piece.  Markers and geometry are ignored.
"""
import typing
from collections import deque

from ribbonkirby.diagram.faces import crossing_pieces
from ribbonkirby.diagram.model import HandleDiagram, slot_is_incoming

Dart = typing.Tuple[int, int]


def _other_end(d: HandleDiagram, edge: int, here: Dart) -> Dart:
    ends = d.occurrences[edge]
    return ends[1] if ends[0] == here else ends[0]


def _walk(d: HandleDiagram, start: Dart, roles: typing.Mapping[int, str]) -> str:
    labels = {start[0]: 0}
    entries = {start[0]: start[1]}
    queue = deque([start[0]])
    words = []
    while queue:
        index = queue.popleft()
        crossing = d.crossings[index]
        entry = entries[index]
        letters = ["u" if entry % 2 == 0 else "o"]
        for relative in range(4):
            slot = (entry + relative) % 4
            edge = crossing.edges[slot]
            neighbour, far_slot = _other_end(d, edge, (index, slot))
            if neighbour not in labels:
                labels[neighbour] = len(labels)
                entries[neighbour] = far_slot
                queue.append(neighbour)
            letters.append(
                f"{labels[neighbour]}.{(far_slot - entries[neighbour]) % 4}"
                f".{roles[edge]}.{'i' if slot_is_incoming(slot, crossing.sign) else 'o'}"
            )
        words.append(",".join(letters))
    return ";".join(words)


def canonical_form(d: HandleDiagram) -> str:
    roles = {edge: c.role.text for c in d.components for edge in c.edges}
    codes = [f"O:{c.role.text}" for c in d.components if d.is_round(c.id)]
    for piece in crossing_pieces(dict(enumerate(d.crossings))):
        codes.append(min(_walk(d, (index, slot), roles) for index in piece for slot in range(4)))
    return "|".join(sorted(codes))


def isomorphic(first: HandleDiagram, second: HandleDiagram) -> bool:
    if len(first.crossings) != len(second.crossings) or len(first.components) != len(second.components):
        return False
    return canonical_form(first) == canonical_form(second)
