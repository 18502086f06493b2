"""Homology of the 4-manifold of a handle diagram and of its boundary."""
import typing

import attr
from eliot import ActionType, Field

from ribbonkirby.algebra.matrices import IntMatrix, cokernel_summary
from ribbonkirby.diagram.model import HandleDiagram
from ribbonkirby.diagram.queries import linking_matrix
from ribbonkirby.errors import NotStandardPosition

HOMOLOGY = ActionType(
    "ribbonkirby:invariants:homology",
    [Field("components", int, "Components of the diagram")],
    [
        Field("h1", str, "H1 of the 4-manifold"),
        Field("boundary_h1", str, "H1 of the boundary"),
        Field("euler", int, "Euler characteristic"),
    ],
)


def _factors(rank: int, torsion: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    return tuple(sorted(torsion)) + (0,) * rank


def describe(factors: typing.Sequence[int]) -> str:
    """``(3, 0)`` reads ``Z/3 + Z``; the trivial group reads ``0``."""
    parts = [f"Z/{f}" for f in factors if f] + ["Z" for f in factors if not f]
    return " + ".join(parts) or "0"


@attr.s(auto_attribs=True, frozen=True)
class HomologySummary:
    """Invariant factors of H1 with 0 standing for a free summand."""

    h1: typing.Tuple[int, ...] = attr.ib(converter=tuple)
    boundary_h1: typing.Tuple[int, ...] = attr.ib(converter=tuple)
    euler: int
    b2: int

    def __str__(self) -> str:
        return (
            f"H1 = {describe(self.h1)}, H1(boundary) = {describe(self.boundary_h1)}, "
            f"chi = {self.euler}, b2 = {self.b2}"
        )


def homology(d: HandleDiagram) -> HomologySummary:
    """Dotted circles count as 1-handles; for the boundary they become 0-framed surgery curves.

    A framed handle kills the sum of the dotted generators weighted by its
    linking numbers with them, so the dotted circles may cross one another
    as long as they form an unlink.
    """
    if d.plain:
        raise NotStandardPosition(f"{d.plain[0].id} is neither dotted nor framed")
    with HOMOLOGY(components=len(d.components)) as action:
        surgery = list(d.dotted) + list(d.framed)
        linking = linking_matrix(d, surgery)
        generators = len(d.dotted)
        relations = IntMatrix([row[:generators] for row in linking[generators:]], generators)
        rank, torsion = cokernel_summary(relations, generators)
        boundary = cokernel_summary(IntMatrix(linking, len(surgery)), len(surgery))
        summary = HomologySummary(
            _factors(rank, torsion),
            _factors(*boundary),
            1 - len(d.dotted) + len(d.framed),
            len(d.framed) - relations.rank(),
        )
        action.addSuccessFields(
            h1=describe(summary.h1), boundary_h1=describe(summary.boundary_h1), euler=summary.euler
        )
        return summary
