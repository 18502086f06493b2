"""Structural validation of handle diagrams."""
import typing
from collections import Counter

import attr
from eliot import ActionType, Field

from ribbonkirby.diagram.faces import crossing_pieces, trace_faces
from ribbonkirby.diagram.model import HandleDiagram, slot_is_incoming, through_slot

VALIDATE = ActionType(
    "ribbonkirby:diagram:validate",
    [Field("crossings", int, "The number of crossings")],
    [Field("violations", lambda vs: [f"{v.kind}: {v.detail}" for v in vs], "The violated invariants")],
)


@attr.s(auto_attribs=True, frozen=True)
class Violation:
    kind: str
    detail: str


@attr.s(auto_attribs=True, frozen=True)
class ValidityReport:
    violations: typing.Tuple[Violation, ...] = attr.ib(converter=tuple, default=())
    vertices: int = 0
    edges: int = 0
    faces: int = 0

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def kinds(self) -> typing.Set[str]:
        return {v.kind for v in self.violations}


def _pairing(d: HandleDiagram) -> typing.Iterator[Violation]:
    owned = Counter(d.edges)
    for edge, count in owned.items():
        if count > 1:
            yield Violation("ComponentCycle", f"edge {edge} is listed {count} times by components")
    for edge, ends in d.occurrences.items():
        if edge not in owned:
            yield Violation("EdgePairing", f"edge {edge} belongs to no component")
        if len(ends) != 2:
            yield Violation("EdgePairing", f"edge {edge} is used {len(ends)} times")
    for component in d.components:
        round_edges = [e for e in component.edges if e not in d.occurrences]
        if round_edges and len(component.edges) > 1:
            yield Violation("EdgePairing", f"component {component.id} has unused edges {round_edges}")
        if not component.edges:
            yield Violation("ComponentCycle", f"component {component.id} has no edges")


def _orientation(d: HandleDiagram) -> typing.Iterator[Violation]:
    for component in d.components:
        edges = component.edges
        if len(edges) == 1 and edges[0] not in d.occurrences:
            continue
        for position, edge in enumerate(edges):
            ends = d.occurrences.get(edge, ())
            incoming = [end for end in ends if slot_is_incoming(end[1], d.crossings[end[0]].sign)]
            if len(ends) != 2 or len(incoming) != 1:
                yield Violation("Orientation", f"edge {edge} does not run from one crossing to the next")
                continue
            index, slot = incoming[0]
            following = d.crossings[index].edges[through_slot(slot)]
            expected = edges[(position + 1) % len(edges)]
            if following != expected:
                yield Violation(
                    "ComponentCycle",
                    f"component {component.id} continues from {edge} to {following}, not {expected}",
                )


def _roles(d: HandleDiagram) -> typing.Iterator[Violation]:
    for name, count in Counter(c.id for c in d.components).items():
        if count > 1:
            yield Violation("DuplicateComponent", f"component id {name} is used {count} times")
    for index, crossing in enumerate(d.crossings):
        if not all(edge in d.owners for edge in crossing.edges):
            continue
        under, over = d.crossing_components(index)
        if under == over and d.component(under).role.is_dotted:
            yield Violation("StandardPosition", f"dotted circle {under} crosses itself at crossing {index}")
        elif under != over and d.component(under).role.is_dotted and d.component(over).role.is_dotted:
            yield Violation("DottedLink", f"dotted circles {under} and {over} cross at crossing {index}")


def _markers(d: HandleDiagram) -> typing.Iterator[Violation]:
    for name, count in Counter(m.name for m in d.markers).items():
        if count > 1:
            yield Violation("Marker", f"marker {name} is defined {count} times")
    for marker in d.markers:
        if marker.edge not in d.owners:
            yield Violation("Marker", f"marker {marker.name} is on unknown edge {marker.edge}")


def validate(d: HandleDiagram) -> ValidityReport:
    """Check every structural invariant and report the violated ones."""
    with VALIDATE(crossings=len(d.crossings)) as action:
        violations = list(_pairing(d))
        if not violations:
            violations.extend(_orientation(d))
        violations.extend(_roles(d))
        violations.extend(_markers(d))
        face_count = 0
        if not violations:
            table = dict(enumerate(d.crossings))
            for piece in crossing_pieces(table):
                sub = {index: table[index] for index in piece}
                piece_faces = len(trace_faces(sub))
                face_count += piece_faces
                euler = len(sub) - 2 * len(sub) + piece_faces
                if euler != 2:
                    violations.append(
                        Violation("Planarity", f"a piece with {len(sub)} crossings has Euler characteristic {euler}")
                    )
            face_count += 2 * sum(1 for e in d.edges if e not in d.occurrences)
        report = ValidityReport(violations, len(d.crossings), len(d.occurrences), face_count)
        action.addSuccessFields(violations=report.violations)
        return report
