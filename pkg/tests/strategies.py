"""Hypothesis strategies."""

from hypothesis import strategies as st
from networkx import DiGraph

from ribbonkirby.algebra import FreeWord, IntMatrix, LaurentPoly
from ribbonkirby.diagram import DiagramEditor, Side
from ribbonkirby.errors import PreconditionFailed
from ribbonkirby.moves import add_bigon, add_curl, remove_bigon, remove_curl, triangle


@st.composite
def laurent_polys(draw, min_exponent=-4, max_exponent=4, max_coefficient=5):
    terms = draw(
        st.dictionaries(
            st.integers(min_value=min_exponent, max_value=max_exponent),
            st.integers(min_value=-max_coefficient, max_value=max_coefficient),
            max_size=max_exponent - min_exponent + 1,
        )
    )
    return LaurentPoly(terms)


@st.composite
def int_matrices(draw, min_size=1, max_size=4, max_entry=6, square=False, symmetric=False):
    rows = draw(st.integers(min_value=min_size, max_value=max_size))
    cols = rows if square or symmetric else draw(st.integers(min_value=min_size, max_value=max_size))
    entries = st.integers(min_value=-max_entry, max_value=max_entry)
    values = [[draw(entries) for _ in range(cols)] for _ in range(rows)]
    if symmetric:
        for i in range(rows):
            for j in range(i):
                values[i][j] = values[j][i]
    return IntMatrix(values, cols)


@st.composite
def unimodular_matrices(draw, size, steps=6):
    """Products of elementary integer row operations."""
    matrix = IntMatrix.identity(size)
    if size < 2:
        return IntMatrix([[draw(st.sampled_from([1, -1]))]], 1) if size else matrix
    for _ in range(draw(st.integers(min_value=0, max_value=steps))):
        i = draw(st.integers(min_value=0, max_value=size - 1))
        j = draw(st.integers(min_value=0, max_value=size - 1).filter(lambda k: k != i))
        factor = draw(st.integers(min_value=-2, max_value=2))
        elementary = [[int(r == c) for c in range(size)] for r in range(size)]
        elementary[i][j] = factor
        matrix = IntMatrix(elementary, size) @ matrix
    if draw(st.booleans()):
        flip = [[int(r == c) * (-1 if r == 0 else 1) for c in range(size)] for r in range(size)]
        matrix = IntMatrix(flip, size) @ matrix
    return matrix


@st.composite
def free_words(draw, generators=3, max_length=8):
    letters = draw(
        st.lists(
            st.tuples(st.integers(min_value=0, max_value=generators - 1), st.sampled_from([1, -1])),
            max_size=max_length,
        )
    )
    return FreeWord(letters)


@st.composite
def reidemeister_walks(draw, d, steps=20, slack=6):
    """``d`` after ``steps`` random Reidemeister moves of all three kinds.

    Once ``d`` has ``slack`` crossings more than it started with, curls and
    finger pairs are only added when nothing can be taken away, so long
    walks stay small.
    """
    rng = draw(st.randoms(use_true_random=False))
    ceiling = len(d.crossings) + slack
    applied = attempts = 0
    while applied < steps and attempts < 20 * steps:
        attempts += 1
        growing, shrinking = [("R1+",)], []
        for face in DiagramEditor.from_diagram(d).faces():
            edge, direction = face.sides[0]
            side = Side.of_direction(direction)
            if len(face) == 1:
                shrinking.append(("R1-", edge, side))
            elif len(face) == 2:
                shrinking.append(("R2-", edge, side))
            elif len(face) == 3:
                growing.append(("R3", edge, side))
            distinct = list(dict(face.sides).items())
            if len(distinct) > 1:
                growing.append(("R2+", distinct))
        if len(d.crossings) >= ceiling and shrinking:
            growing = [move for move in growing if move[0] == "R3"]
        kind, *site = rng.choice(growing + shrinking)
        try:
            if kind == "R1+":
                d = add_curl(d, rng.choice(sorted(d.edges)), rng.choice(list(Side)), rng.choice([1, -1]))
            elif kind == "R2+":
                (fixed, fixed_direction), (pushed, pushed_direction) = rng.sample(site[0], 2)
                d = add_bigon(
                    d, fixed, Side.of_direction(fixed_direction), pushed, Side.of_direction(pushed_direction),
                    rng.random() < 0.5,
                )
            elif kind == "R1-":
                d = remove_curl(d, *site)
            elif kind == "R2-":
                d = remove_bigon(d, *site)
            else:
                d = triangle(d, *site)
        except PreconditionFailed:
            continue
        applied += 1
    return d


@st.composite
def dependency_graphs(draw, max_nodes=8):
    """Random acyclic graphs; an edge (i, j) means i requires j, and always j < i."""
    size = draw(st.integers(min_value=1, max_value=max_nodes))
    graph = DiGraph()
    graph.add_nodes_from(range(size))
    for i in range(size):
        for j in range(i):
            if draw(st.booleans()):
                graph.add_edge(i, j)
    return graph
