"""
Kauffman bracket and Jones polynomial.

The state sum runs crossing by crossing and keeps, for every way the strands
resolved so far join the still open edges, one polynomial coefficient.  A
crossing listed counterclockwise from its incoming under-edge as (a, b, c, d)
resolves as A·[a b][c d] + A⁻¹·[a d][b c].
"""
import typing

from eliot import ActionType, Field

from ribbonkirby.algebra.laurent import LaurentPoly
from ribbonkirby.diagram.model import HandleDiagram
from ribbonkirby.diagram.queries import writhe
from ribbonkirby.errors import TooLarge

#: Largest diagram the state sum accepts.
MAX_CROSSINGS = 24

BRACKET = ActionType(
    "ribbonkirby:invariants:bracket",
    [Field("crossings", int, "The number of crossings")],
    [Field("widest", int, "The largest number of open-edge matchings kept at once")],
)

Matching = typing.Tuple[typing.Tuple[int, int], ...]

A = LaurentPoly.monomial(1, variable="A")
A_INVERSE = LaurentPoly.monomial(-1, variable="A")
#: The value of an extra split circle, −A² − A⁻².
LOOP = LaurentPoly({2: -1, -2: -1}, "A")


def unlink_value(components: int) -> LaurentPoly:
    """The normalized bracket of a crossingless unlink."""
    return LOOP ** (components - 1) if components else LaurentPoly.constant(1, "A")


def _order(d: HandleDiagram) -> typing.List[int]:
    """Crossings ordered so each one shares as many edges as possible with those before it."""
    remaining = set(range(len(d.crossings)))
    seen: typing.Set[int] = set()
    order = []
    while remaining:
        best = max(sorted(remaining), key=lambda index: sum(e in seen for e in d.crossings[index].edges))
        remaining.remove(best)
        order.append(best)
        seen.update(d.crossings[best].edges)
    return order


def _join(matching: typing.Dict[int, int], p: int, q: int) -> int:
    """Connect the open ends p and q; return 1 if that closes a loop."""
    if p == q:
        return 1
    if matching.get(p) == q:
        del matching[p], matching[q]
        return 1
    if p in matching:
        far = matching.pop(p)
        del matching[far]
        p = far
    if q in matching:
        far = matching.pop(q)
        del matching[far]
        q = far
    matching[p] = q
    matching[q] = p
    return 0


def bracket(d: HandleDiagram) -> LaurentPoly:
    """⟨D⟩ in the variable A, normalized so the crossingless circle has bracket 1."""
    if len(d.crossings) > MAX_CROSSINGS:
        raise TooLarge(f"{len(d.crossings)} crossings exceed the bracket budget of {MAX_CROSSINGS}")
    with BRACKET(crossings=len(d.crossings)) as action:
        states: typing.Dict[Matching, LaurentPoly] = {(): LaurentPoly.constant(1, "A")}
        widest = 1
        for index in _order(d):
            a, b, c, e = d.crossings[index].edges
            resolved: typing.Dict[Matching, LaurentPoly] = {}
            for key, value in states.items():
                for arcs, weight in ((((a, b), (c, e)), A), (((a, e), (b, c)), A_INVERSE)):
                    matching = {}
                    for x, y in key:
                        matching[x] = y
                        matching[y] = x
                    loops = sum(_join(matching, p, q) for p, q in arcs)
                    new_key = tuple(sorted((x, y) for x, y in matching.items() if x < y))
                    term = value * weight * LOOP ** loops
                    resolved[new_key] = resolved[new_key] + term if new_key in resolved else term
            states = resolved
            widest = max(widest, len(states))
        total = states.get((), LaurentPoly((), "A"))
        round_components = sum(1 for c in d.components if all(e not in d.occurrences for e in c.edges))
        if not d.crossings:
            result = unlink_value(round_components)
        else:
            result = (total * LOOP ** round_components).exact_divide(LOOP)
        action.addSuccessFields(widest=widest)
        return result


def jones(d: HandleDiagram) -> LaurentPoly:
    """The Jones polynomial (−A³)^(−w)·⟨D⟩ in the bracket variable A; the unknot gives 1."""
    w = writhe(d)
    return bracket(d) * LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1, "A")


def jones_in_t(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a knot's Jones polynomial in t = A⁻⁴."""
    return LaurentPoly(p.divide_exponents(4).invert_variable().terms, "t")
