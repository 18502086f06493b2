"""
Seifert surfaces through braiding.

The oriented smoothing of a knot diagram gives its Seifert circles.  Vogel
moves (a Reidemeister II pass between two edges of different circles that run
the same way around a face) are applied until the circles are coherently
nested; the diagram is then a closed braid whose word is read along a ray
from the innermost circle outwards.  The Seifert matrix is that of the
canonical surface of the braid closure: stacked discs joined by one twisted
band per letter.
"""
import itertools
import typing
from fractions import Fraction

import attr
from eliot import ActionType, Field
from networkx import DiGraph, Graph, NetworkXUnfeasible, lexicographical_topological_sort
from networkx.algorithms import bipartite

from ribbonkirby.algebra.laurent import LaurentPoly, symmetrize_alexander
from ribbonkirby.algebra.matrices import IntMatrix, seifert_form_polynomial, signature_of_symmetric
from ribbonkirby.diagram.faces import Face, faces, trace_faces
from ribbonkirby.diagram.model import Crossing, HandleDiagram, Side, Slot, slot_is_incoming
from ribbonkirby.diagram.surgery import DiagramEditor
from ribbonkirby.errors import NotAKnot, TooLarge

#: Vogel moves tried before a diagram is given up on.
MAX_VOGEL_MOVES = 64

#: The signature this module assigns to the right-handed (positive) trefoil.
RIGHT_TREFOIL_SIGNATURE = -2

VOGEL_BRAIDING = ActionType(
    "ribbonkirby:invariants:vogel_braiding",
    [Field("crossings", int, "Crossings of the input diagram")],
    [
        Field("moves", int, "Vogel moves applied"),
        Field("strands", int, "Strands of the resulting braid"),
    ],
)

Table = typing.Mapping[int, Crossing]
Letter = typing.Tuple[int, int]


@attr.s(auto_attribs=True, frozen=True)
class SeifertData:
    circles: int
    genus: int
    matrix: IntMatrix
    braid: typing.Tuple[Letter, ...] = attr.ib(converter=tuple, default=())

    @property
    def is_valid(self) -> bool:
        """The intersection form V - Vᵀ of a knot surface is unimodular."""
        return abs((self.matrix - self.matrix.transpose()).determinant()) == 1


class KnotInvariants(typing.NamedTuple):
    alexander: LaurentPoly
    signature: int
    determinant: int


def _heads(table: Table) -> typing.Dict[int, Slot]:
    heads = {}
    for index, crossing in table.items():
        for slot, edge in enumerate(crossing.edges):
            if slot_is_incoming(slot, crossing.sign):
                heads[edge] = (index, slot)
    return heads


def seifert_circles(table: Table) -> typing.List[typing.List[int]]:
    """Edge cycles of the oriented smoothing, each in traversal order."""
    heads = _heads(table)

    def turn(edge: int) -> int:
        index, slot = heads[edge]
        crossing = table[index]
        return crossing.over[1] if slot == 0 else crossing.edges[2]

    circles, seen = [], set()
    for start in sorted(heads):
        if start in seen:
            continue
        circle = [start]
        edge = turn(start)
        while edge != start:
            circle.append(edge)
            edge = turn(edge)
        seen.update(circle)
        circles.append(circle)
    return circles


def _circle_of(circles: typing.Sequence[typing.Sequence[int]]) -> typing.Dict[int, int]:
    return {edge: number for number, circle in enumerate(circles) for edge in circle}


def _incompatible_pair(table: Table, circle_of: typing.Mapping[int, int]):
    for face in trace_faces(table):
        for (e1, d1), (e2, d2) in itertools.combinations(face.sides, 2):
            if d1 == d2 and e1 != e2 and circle_of[e1] != circle_of[e2]:
                return e1, e2, Side.of_direction(d1)
    return None


def braided(d: HandleDiagram) -> typing.Tuple[HandleDiagram, int]:
    """Apply Vogel moves until the Seifert circles are coherently nested."""
    editor = DiagramEditor.from_diagram(d)
    for moves in range(MAX_VOGEL_MOVES + 1):
        circles = seifert_circles(editor.crossings)
        pair = _incompatible_pair(editor.crossings, _circle_of(circles))
        if pair is None:
            return editor.to_diagram(), moves
        fixed, pushed, side = pair
        editor.finger(fixed, side, pushed, side, True, True)
    raise TooLarge(f"the diagram is not braided after {MAX_VOGEL_MOVES} Vogel moves")


def _levels(circles, circle_of, traced: typing.Sequence[Face]) -> typing.List[int]:
    # in a face between two levels the inner circle is traced forwards and the outer one backwards
    nesting = DiGraph()
    nesting.add_nodes_from(range(len(circles)))
    for face in traced:
        inner = {circle_of[e] for e, direction in face.sides if direction > 0}
        outer = {circle_of[e] for e, direction in face.sides if direction < 0}
        nesting.add_edges_from((a, b) for a in inner for b in outer if a != b)
    try:
        order = list(lexicographical_topological_sort(nesting))
    except NetworkXUnfeasible:
        raise TooLarge("the Seifert circles are not nested")
    if any(not nesting.has_edge(a, b) for a, b in zip(order, order[1:])):
        raise TooLarge("the Seifert circles do not form a single stack")
    return order


def _ray(circles, circle_of, order, traced) -> typing.Dict[int, int]:
    """One edge per circle, met by a ray from the innermost circle outwards."""
    beyond = {side: face for face in traced for side in face.sides}
    cut = {}
    candidates: typing.Iterable[int] = circles[order[0]]
    for level, circle in enumerate(order):
        following = order[level + 1] if level + 1 < len(order) else None
        for edge in candidates:
            if following is None:
                cut[circle] = edge
                break
            face = beyond[(edge, 1)]
            crossing_out = [e for e, direction in face.sides if direction < 0 and circle_of[e] == following]
            if crossing_out:
                cut[circle] = edge
                candidates = crossing_out
                break
        else:
            raise TooLarge(f"no ray crosses Seifert circle {circle}")
    return cut


def braid_word(d: HandleDiagram) -> typing.Tuple[int, typing.List[Letter]]:
    """Strand count and letters (i, sign) of a braided diagram, i counted from 0."""
    table = dict(enumerate(d.crossings))
    circles = seifert_circles(table)
    circle_of = _circle_of(circles)
    traced = trace_faces(table)
    order = _levels(circles, circle_of, traced)
    level = {circle: position for position, circle in enumerate(order)}
    cut = _ray(circles, circle_of, order, traced)
    heads = _heads(table)
    sequence = DiGraph()
    sequence.add_nodes_from(table)
    for number, circle in enumerate(circles):
        start = circle.index(cut[number])
        met = [heads[circle[(start + step) % len(circle)]][0] for step in range(len(circle))]
        sequence.add_edges_from(zip(met, met[1:]))
    try:
        word = list(lexicographical_topological_sort(sequence))
    except NetworkXUnfeasible:
        raise TooLarge("the crossings cannot be ordered around the braid axis")
    letters = []
    for index in word:
        crossing = table[index]
        first, second = level[circle_of[crossing.edges[0]]], level[circle_of[crossing.over[0]]]
        if abs(first - second) != 1:
            raise TooLarge(f"crossing {index} does not join neighbouring strands")
        letters.append((min(first, second), crossing.sign))
    return len(circles), letters


def braid_seifert_matrix(letters: typing.Sequence[Letter]) -> IntMatrix:
    """Seifert matrix of the closure of a braid word.

    One generator per pair of consecutive letters with the same index; the
    loop runs up one band and down the next.
    """
    positions: typing.Dict[int, typing.List[int]] = {}
    for position, (index, _) in enumerate(letters):
        positions.setdefault(index, []).append(position)
    loops = [(i, a, b) for i in sorted(positions) for a, b in zip(positions[i], positions[i][1:])]
    signs = [sign for _, sign in letters]
    entries = [[0] * len(loops) for _ in loops]
    for x, (i, p, q) in enumerate(loops):
        for y, (j, r, s) in enumerate(loops):
            if x == y:
                entries[x][y] = -(signs[p] + signs[q]) // 2
            elif i == j and q == r:
                entries[x][y] = (signs[q] - 1) // 2
            elif i == j and s == p:
                entries[x][y] = (signs[p] + 1) // 2
            elif j == i + 1 and p < r < q < s:
                entries[x][y] = 1
            elif j == i + 1 and r < p < s < q:
                entries[x][y] = -1
    return IntMatrix(entries, len(loops))


def _knot(d: HandleDiagram):
    if len(d.components) != 1:
        raise NotAKnot(f"expected one component, got {len(d.components)}")


def seifert_data(d: HandleDiagram) -> SeifertData:
    _knot(d)
    if not d.crossings:
        return SeifertData(1, 0, IntMatrix.zeros(0, 0))
    circles = len(seifert_circles(dict(enumerate(d.crossings))))
    with VOGEL_BRAIDING(crossings=len(d.crossings)) as action:
        braid, moves = braided(d)
        strands, letters = braid_word(braid)
        action.addSuccessFields(moves=moves, strands=strands)
    matrix = braid_seifert_matrix(letters)
    return SeifertData(circles, matrix.rows // 2, matrix, letters)


def alexander_sig_det(d: HandleDiagram) -> KnotInvariants:
    """Δ, σ and det from a Seifert matrix: Δ = det(V − tVᵀ), σ = sign(V + Vᵀ), det = |Δ(−1)|."""
    matrix = seifert_data(d).matrix
    alexander = symmetrize_alexander(seifert_form_polynomial(matrix))
    signature = signature_of_symmetric(matrix + matrix.transpose())
    determinant = abs(Fraction(alexander.evaluate(-1)))
    return KnotInvariants(alexander, signature, int(determinant))


def goeritz_matrix(d: HandleDiagram) -> IntMatrix:
    """Reduced Goeritz matrix of the checkerboard colouring.

    The unshaded faces are those coloured like the face at corner 0 of the
    first crossing; a crossing counts +1 when its unshaded corners run
    counterclockwise from an under-edge to an over-edge.
    """
    if not d.crossings:
        return IntMatrix.zeros(0, 0)
    traced = faces(d)
    corner_face = {corner: number for number, face in enumerate(traced) for corner in face.corners}
    beside = {side: number for number, face in enumerate(traced) for side in face.sides}
    adjacency = Graph()
    adjacency.add_nodes_from(range(len(traced)))
    adjacency.add_edges_from((beside[(edge, 1)], beside[(edge, -1)]) for edge in d.occurrences)
    colour = bipartite.color(adjacency)
    unshaded_colour = colour[corner_face[(0, 0)]]
    unshaded = [number for number in range(len(traced)) if colour[number] == unshaded_colour]
    row = {number: position for position, number in enumerate(unshaded)}
    entries = [[0] * len(unshaded) for _ in unshaded]
    for index in range(len(d.crossings)):
        first = 0 if colour[corner_face[(index, 0)]] == unshaded_colour else 1
        eta = 1 if first == 0 else -1
        a, b = row[corner_face[(index, first)]], row[corner_face[(index, first + 2)]]
        if a == b:
            continue
        entries[a][b] -= eta
        entries[b][a] -= eta
        entries[a][a] += eta
        entries[b][b] += eta
    size = len(unshaded) - 1
    return IntMatrix([r[:size] for r in entries[:size]], size)


def goeritz_determinant(d: HandleDiagram) -> int:
    """|det| of the reduced Goeritz matrix, the knot determinant."""
    return abs(goeritz_matrix(d).determinant())
