"""
Line-oriented PD text.

::

    # trefoil
    component K role=plain edges=1,2,3,4,5,6
    X 1 5 2 4 +
    X 3 1 4 6 +
    X 5 3 6 2 +
    marker exterior 1 right

Crossing lines list the edges counterclockwise from the incoming under-edge.
The trailing sign may be left out when the component edge order decides it.
"""
import typing

from ribbonkirby.diagram.model import Component, ComponentRole, Crossing, HandleDiagram, Marker, Side
from ribbonkirby.diagram.validation import validate
from ribbonkirby.errors import ParseError, ValidationError

Token = typing.Tuple[str, int]


def _tokens(line: str) -> typing.List[Token]:
    """Words of a line with their 1-based columns."""
    found, column = [], 0
    for word in line.split():
        column = line.index(word, column)
        found.append((word, column + 1))
        column += len(word)
    return found


def _integer(token: Token, number: int) -> int:
    word, column = token
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"expected an integer, got {word!r}", number, column)


def _keyed(token: Token, key: str, number: int) -> str:
    word, column = token
    name, equals, text = word.partition("=")
    if name != key or not equals:
        raise ParseError(f"expected {key}=…, got {word!r}", number, column)
    return text


def _component(tokens: typing.List[Token], number: int) -> Component:
    if len(tokens) != 4:
        raise ParseError("a component line reads: component <id> role=<role> edges=<a,b,…>", number, 1)
    role_text = _keyed(tokens[2], "role", number)
    try:
        role = ComponentRole.parse(role_text)
    except ValueError:
        raise ParseError(f"unknown role {role_text!r}", number, tokens[2][1])
    edges_text = _keyed(tokens[3], "edges", number)
    edges = [_integer((word, tokens[3][1]), number) for word in edges_text.split(",") if word]
    if not edges:
        raise ParseError("a component needs at least one edge", number, tokens[3][1])
    return Component(tokens[1][0], role, edges)


def _derived_sign(a: int, b: int, c: int, d: int, following: typing.Mapping[int, int]) -> typing.Optional[int]:
    positive, negative = following.get(d) == b, following.get(b) == d
    if positive == negative:
        return None
    return 1 if positive else -1


def parse_pd_text(text: str) -> HandleDiagram:
    """Parse PD text; raises ParseError for malformed text and ValidationError for invalid diagrams."""
    components: typing.List[Component] = []
    crossing_lines: typing.List[typing.Tuple[int, typing.List[Token]]] = []
    markers: typing.List[Marker] = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line.split("#", 1)[0])
        if not tokens:
            continue
        keyword = tokens[0][0]
        if keyword == "component":
            components.append(_component(tokens, number))
        elif keyword == "X":
            if len(tokens) not in (5, 6):
                raise ParseError("a crossing line reads: X <a> <b> <c> <d> [+|-]", number, 1)
            crossing_lines.append((number, tokens))
        elif keyword == "marker":
            if len(tokens) != 4:
                raise ParseError("a marker line reads: marker <name> <edge> <left|right>", number, 1)
            try:
                side = Side(tokens[3][0])
            except ValueError:
                raise ParseError(f"unknown side {tokens[3][0]!r}", number, tokens[3][1])
            markers.append(Marker(tokens[1][0], _integer(tokens[2], number), side))
        else:
            raise ParseError(f"unknown line kind {keyword!r}", number, tokens[0][1])

    declared = {edge for c in components for edge in c.edges}
    following = {
        edge: c.edges[(i + 1) % len(c.edges)] for c in components for i, edge in enumerate(c.edges)
    }
    crossings = []
    for number, tokens in crossing_lines:
        edges = [_integer(token, number) for token in tokens[1:5]]
        for edge, (_, column) in zip(edges, tokens[1:5]):
            if edge not in declared:
                raise ParseError(f"edge {edge} belongs to no component", number, column)
        if len(tokens) == 6:
            word, column = tokens[5]
            if word not in ("+", "-"):
                raise ParseError(f"a crossing sign is + or -, got {word!r}", number, column)
            sign = 1 if word == "+" else -1
        else:
            sign = _derived_sign(*edges, following)
            if sign is None:
                raise ParseError("the crossing sign is ambiguous; write + or -", number, tokens[-1][1])
        crossings.append(Crossing(edges, sign))

    d = HandleDiagram(crossings, components, markers)
    report = validate(d)
    if not report.is_valid:
        raise ValidationError(report)
    return d


def serialize_pd_text(d: HandleDiagram) -> str:
    lines = [
        f"component {c.id} role={c.role.text} edges={','.join(str(edge) for edge in c.edges)}"
        for c in d.components
    ]
    lines.extend(
        "X {} {} {} {} {}".format(*crossing.edges, "+" if crossing.sign > 0 else "-") for crossing in d.crossings
    )
    lines.extend(f"marker {m.name} {m.edge} {m.side.value}" for m in d.markers)
    return "\n".join(lines) + "\n"
