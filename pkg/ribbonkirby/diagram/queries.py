"""Counting queries and global symmetries of handle diagrams."""
import typing
from fractions import Fraction

import attr

from ribbonkirby.diagram.model import Component, Crossing, HandleDiagram


def _both(d: HandleDiagram, a: str, b: str) -> typing.Iterator[int]:
    d.component(a)
    d.component(b)
    for index in range(len(d.crossings)):
        if set(d.crossing_components(index)) == {a, b}:
            yield index


def crossings_between(d: HandleDiagram, a: str, b: str) -> int:
    """Number of crossings with one strand on ``a`` and the other on ``b``."""
    if a == b:
        raise ValueError("crossings_between needs two different components")
    return sum(1 for _ in _both(d, a, b))


def linking_number(d: HandleDiagram, a: str, b: str) -> int:
    if a == b:
        raise ValueError("linking_number needs two different components")
    total = sum(d.crossings[index].sign for index in _both(d, a, b))
    return int(Fraction(total, 2))


def writhe(d: HandleDiagram, a: typing.Optional[str] = None) -> int:
    """Sum of the self-crossing signs of ``a``, or of every crossing when ``a`` is None."""
    if a is None:
        return sum(c.sign for c in d.crossings)
    return sum(d.crossings[index].sign for index in _both(d, a, a))


def self_crossings(d: HandleDiagram, a: str) -> typing.List[int]:
    return list(_both(d, a, a))


def linking_matrix(d: HandleDiagram, components: typing.Sequence[Component]) -> typing.List[typing.List[int]]:
    """Pairwise linking numbers with the framing of framed components on the diagonal."""
    return [
        [
            (a.role.framing or 0) if a.id == b.id else linking_number(d, a.id, b.id)
            for b in components
        ]
        for a in components
    ]


def mirror(d: HandleDiagram) -> HandleDiagram:
    """Switch every crossing; geometry and markers stay in place."""
    return attr.evolve(d, crossings=[c.mirrored() for c in d.crossings])


def reverse(d: HandleDiagram, component_id: str) -> HandleDiagram:
    """Reverse the orientation of one component."""
    target = d.component(component_id)
    reversed_edges = set(target.edges)
    crossings = []
    for crossing in d.crossings:
        a, b, c, dd = crossing.edges
        under_flips = a in reversed_edges
        over_flips = crossing.over[0] in reversed_edges
        edges = (c, dd, a, b) if under_flips else (a, b, c, dd)
        sign = crossing.sign if under_flips == over_flips else -crossing.sign
        crossings.append(Crossing(edges, sign))
    components = [
        attr.evolve(c, edges=tuple(reversed(c.edges))) if c.id == component_id else c for c in d.components
    ]
    markers = [
        attr.evolve(m, side=m.side.opposite) if m.edge in reversed_edges else m for m in d.markers
    ]
    return attr.evolve(d, crossings=crossings, components=components, markers=markers)


def reverse_all(d: HandleDiagram) -> HandleDiagram:
    for component in d.components:
        d = reverse(d, component.id)
    return d
