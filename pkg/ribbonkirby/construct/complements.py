"""
Ribbon disc complements of T(2,n)#T(2,-n) and P(n,-n,2k).

R_n and its alternative picture come from ribbon surgery on the symmetric
pretzel form.  R_n' and the necklace picture are drawn directly: a left
dotted circle ``L`` and a right dotted circle ``R`` side by side, and a
0-framed 2-handle ``h`` whose two parallel strands wind (n-1)/2 times around
the inner strands of both circles.
"""
import typing

import attr
from eliot import ActionType, Field

from ribbonkirby.construct.fixtures import symmetric_ribbon_fixture
from ribbonkirby.construct.knots import EXTERIOR, MERIDIAN
from ribbonkirby.construct.morse import MorseBuilder, MorseLayout
from ribbonkirby.construct.ribbon import ribbon_surgery
from ribbonkirby.diagram.model import ComponentRole, HandleDiagram, Marker, Side
from ribbonkirby.errors import BadParameter

COMPLEMENT = ActionType(
    "ribbonkirby:construct:disc_complement",
    [
        Field.for_types("family", [str], "Rn, Rn_prime, alt or necklace"),
        Field("n", int, "The torus knot parameter"),
    ],
    [
        Field("dotted", int, "Dotted circles"),
        Field("framed", int, "Framed 2-handles"),
    ],
)


@attr.s(auto_attribs=True, frozen=True)
class Handcuff:
    """A 0-framed 2-handle ``ring`` joining the dotted circles ``lower`` and ``upper``."""

    lower: str
    upper: str
    ring: str


def _check(n: int):
    if n < 3 or n % 2 == 0:
        raise BadParameter(f"n must be odd and at least 3, got {n}")


def _neck(builder: MorseBuilder, position: int, ring: str, upper: str):
    """Close the strand pair at ``position`` and reopen it as ``upper``, both halves linked by ``ring``."""
    builder.cup(position, ring).cross(position + 1, "/").cross(position + 2, "\\").cap(position + 1)
    builder.cup(position + 1, upper).cross(position + 2, "/").cross(position + 1, "\\").cap(position)


def _winding(builder: MorseBuilder):
    # strands: L-outer, L-inner, h, h, R-inner, R-outer
    builder.cross(1, "\\").cross(2, "\\")
    builder.cross(2, "\\").cross(1, "\\").cross(3, "\\").cross(2, "\\")
    builder.cross(2, "\\").cross(3, "\\")


def _start(k: int) -> MorseBuilder:
    builder = MorseBuilder().cup(0, "L").cup(2, "R").cup(3, "h").tag(0, MERIDIAN)
    builder.cross(2, "/").cross(3, "\\")
    return builder.twist(2, 2 * k)


def _finish(builder: MorseBuilder) -> MorseLayout:
    builder.cross(1, "\\").cross(2, "\\").cross(0, "/").cross(1, "\\")
    builder.cap(0).cap(0).cap(0)
    builder.mark(MERIDIAN, MERIDIAN, Side.RIGHT)
    return builder.build()


def _roles(layout: MorseLayout) -> HandleDiagram:
    d = layout.diagram
    components = []
    for component in d.components:
        dotted = component.id[0] in "LRD"
        components.append(
            attr.evolve(component, role=ComponentRole.dotted() if dotted else ComponentRole.framed(0))
        )
    return attr.evolve(d, components=components)


def Rn_prime_layout(n: int, k: int = 0) -> MorseLayout:
    _check(n)
    builder = _start(k)
    for _ in range((n - 1) // 2):
        _winding(builder)
    return _finish(builder)


def disc_complement_Rn_prime(n: int, k: int = 0) -> HandleDiagram:
    """Two dotted circles and one 0-framed handle with k full twists.

    The handle crosses the left circle 2n+2 times and the right one 2n times.
    """
    with COMPLEMENT(family="Rn_prime", n=n) as action:
        d = _roles(Rn_prime_layout(n, k))
        action.addSuccessFields(dotted=len(d.dotted), framed=len(d.framed))
        return d


def necklace_handcuffs(n: int) -> typing.List[Handcuff]:
    """The handcuff 2-handles of the necklace picture, in drawing order.

    Necks of the left circle after each winding are used first, then the
    necks of the right circle between windings; n-3 handcuffs in all.
    """
    _check(n)
    windings = (n - 1) // 2
    left_sites = min(n - 3, windings)
    right_sites = n - 3 - left_sites
    cuffs = []
    left = right = 1
    for j in range(1, windings + 1):
        if j <= left_sites:
            left += 1
            cuffs.append(Handcuff("L" if left == 2 else f"L{left - 1}", f"L{left}", f"k{len(cuffs) + 1}"))
        if j <= right_sites:
            right += 1
            cuffs.append(Handcuff("R" if right == 2 else f"R{right - 1}", f"R{right}", f"k{len(cuffs) + 1}"))
    return cuffs


def necklace_layout(n: int) -> MorseLayout:
    _check(n)
    builder = _start(0)
    _neck(builder, 2, "D", "h2")
    builder.cross(3, "\\").cross(3, "/")
    windings = (n - 1) // 2
    cuffs = iter(necklace_handcuffs(n))
    cuff = next(cuffs, None)
    for _ in range(windings):
        _winding(builder)
        for position, prefix in ((0, "L"), (4, "R")):
            if cuff is not None and cuff.upper.startswith(prefix):
                _neck(builder, position, cuff.ring, cuff.upper)
                cuff = next(cuffs, None)
    return _finish(builder)


def disc_complement_necklace(n: int) -> HandleDiagram:
    """n dotted circles strung on n-1 framed handles, ready for handle moves.

    The dotted circle ``D`` sits on the framed handle between ``h`` and
    ``h2``; the left and right circles are split at necks into pieces joined
    by handcuffs, and the right circle passes twice over ``h2``.  Every dotted
    circle is crossed only by framed strands.
    """
    with COMPLEMENT(family="necklace", n=n) as action:
        d = _roles(necklace_layout(n))
        action.addSuccessFields(dotted=len(d.dotted), framed=len(d.framed))
        return d


def disc_complement_Rn(n: int) -> HandleDiagram:
    """The complement cut out by the n-1 ribbon moves between the twist columns of P(n,-n,0).

    The cut pieces ``D1``… form an unlink drawn with crossings among them;
    ``D1`` carries the knot's exterior strand and holds the other pieces.
    """
    _check(n)
    with COMPLEMENT(family="Rn", n=n) as action:
        fixture = symmetric_ribbon_fixture(n)
        d = ribbon_surgery(fixture.diagram, fixture.bands)
        action.addSuccessFields(dotted=len(d.dotted), framed=len(d.framed))
        return d


def disc_complement_alt(n: int) -> HandleDiagram:
    """R_n with the outer strand of its large dotted circle swung over all the other circles.

    On the sphere the swing only carries the point at infinity across that
    strand: the crossings are those of R_n and the ``exterior`` marker moves
    to the other side of the strand.
    """
    _check(n)
    with COMPLEMENT(family="alt", n=n) as action:
        d = disc_complement_Rn(n)
        outer = d.marker(EXTERIOR) or d.marker(MERIDIAN)
        markers = [m for m in d.markers if m.name != EXTERIOR]
        markers.append(Marker(EXTERIOR, outer.edge, outer.side.opposite))
        d = attr.evolve(d, markers=markers)
        action.addSuccessFields(dotted=len(d.dotted), framed=len(d.framed))
        return d
