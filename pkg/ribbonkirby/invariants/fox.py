"""Alexander polynomials from Fox calculus on group presentations."""
import typing
from functools import reduce
from math import gcd

import sympy
from networkx import Graph, connected_components

from ribbonkirby.algebra.laurent import LaurentPoly
from ribbonkirby.algebra.presentations import GroupPresentation, alexander_from_presentation
from ribbonkirby.algebra.words import FreeWord
from ribbonkirby.diagram.model import HandleDiagram
from ribbonkirby.errors import BadAbelianization, NotAKnot
from ribbonkirby.invariants.fundamental_group import pi1


def over_arcs(d: HandleDiagram) -> typing.Dict[int, int]:
    """Number the arcs of a diagram; an arc runs over crossings and ends where it goes under."""
    arcs = Graph()
    arcs.add_nodes_from(d.edges)
    arcs.add_edges_from(crossing.over for crossing in d.crossings)
    pieces = sorted((sorted(piece) for piece in connected_components(arcs)), key=lambda piece: piece[0])
    return {edge: number for number, piece in enumerate(pieces) for edge in piece}


def wirtinger_presentation(d: HandleDiagram) -> GroupPresentation:
    """One generator per arc and one relator per crossing."""
    arc = over_arcs(d)
    relators = []
    for crossing in d.crossings:
        k = FreeWord.generator(arc[crossing.over[0]])
        i = FreeWord.generator(arc[crossing.edges[0]])
        j = FreeWord.generator(arc[crossing.edges[2]])
        if crossing.sign > 0:
            relators.append(k.inverse() * i * k * j.inverse())
        else:
            relators.append(k * i * k.inverse() * j.inverse())
    count = len(set(arc.values()))
    return GroupPresentation(count, relators, [f"a{n}" for n in range(count)])


def abelianization_onto_z(pres: GroupPresentation) -> typing.List[int]:
    """The primitive map to Z killing every relator; it must be unique up to sign."""
    if pres.generator_count == 0:
        raise BadAbelianization("the trivial group does not map onto Z")
    exponents = sympy.Matrix(
        [[r.exponent_sum(g) for g in range(pres.generator_count)] for r in pres.relators]
        or [[0] * pres.generator_count]
    )
    kernel = exponents.nullspace()
    if len(kernel) != 1:
        raise BadAbelianization(f"the abelianization has free rank {len(kernel)}, not 1")
    vector = kernel[0]
    denominator = reduce(lambda a, b: a * b // gcd(a, b), [int(sympy.fraction(x)[1]) for x in vector], 1)
    values = [int(x * denominator) for x in vector]
    divisor = reduce(gcd, values, 0)
    values = [value // divisor for value in values]
    first = next(value for value in values if value)
    return [-value for value in values] if first < 0 else values


def alexander_fox(d: HandleDiagram) -> LaurentPoly:
    """Δ of a knot from its Wirtinger presentation, or of a disc complement from its π1."""
    if d.dotted:
        pres = pi1(d)
        return alexander_from_presentation(pres, abelianization_onto_z(pres))
    if len(d.components) != 1:
        raise NotAKnot(f"expected one component, got {len(d.components)}")
    if not d.crossings:
        return LaurentPoly.constant(1)
    pres = wirtinger_presentation(d)
    return alexander_from_presentation(pres, [1] * pres.generator_count)
