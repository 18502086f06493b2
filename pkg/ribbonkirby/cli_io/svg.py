"""
SVG figures of handle diagrams.

Edges follow the layout polylines when the diagram carries fresh geometry.
Otherwise crossings are spread on a circle and edges drawn as straight
chords, and the figure carries a ``schematic`` badge.  Over-strands are
redrawn across a white halo at every crossing, which leaves the gap in the
under-strand.
"""
import math
import typing

import attr
import svgwrite

from ribbonkirby.diagram.model import Component, HandleDiagram

Point = typing.Tuple[float, float]

COLOURS = {"dotted": "#1f4e9c", "framed": "#b22222", "plain": "#000000"}


@attr.s(auto_attribs=True, frozen=True)
class RenderOptions:
    scale: float = 40.0
    margin: float = 30.0
    stroke_width: float = 3.0
    halo_width: float = 9.0
    #: How far an over-strand is redrawn on either side of its crossing, in layout units.
    gap: float = 0.3
    labels: bool = True


def _fmt(value: float) -> float:
    return round(value, 2)


def _geometry_shapes(d: HandleDiagram) -> typing.Tuple[typing.Dict[int, typing.List[Point]], typing.Dict[int, Point]]:
    geometry = d.geometry
    return {edge: list(points) for edge, points in geometry.polylines.items()}, dict(geometry.crossings)


def _schematic_shapes(d: HandleDiagram) -> typing.Tuple[typing.Dict[int, typing.List[Point]], typing.Dict[int, Point]]:
    count = max(len(d.crossings), 1)
    radius = max(2.0, count / math.pi)
    points = {
        index: (radius * math.cos(2 * math.pi * index / count), radius * math.sin(2 * math.pi * index / count))
        for index in range(len(d.crossings))
    }
    polylines = {}
    for edge, ends in d.occurrences.items():
        (first, _), (second, _) = ends
        if first == second:
            x, y = points[first]
            polylines[edge] = [(x, y), (x * 1.25 + 0.3, y * 1.25), (x * 1.25 - 0.3, y * 1.25), (x, y)]
        else:
            polylines[edge] = [points[first], points[second]]
    return polylines, points


def _round_circles(d: HandleDiagram, centre_x: float) -> typing.Dict[str, typing.Tuple[Point, float]]:
    circles = {}
    offset = centre_x
    for component in d.components:
        if d.is_round(component.id):
            offset += 1.5
            circles[component.id] = ((offset, 0.0), 1.0)
            offset += 1.5
    return circles


class _Canvas:
    def __init__(self, points: typing.Iterable[Point], options: RenderOptions):
        points = list(points) or [(0.0, 0.0)]
        self.options = options
        self.min_x = min(x for x, _ in points)
        self.max_y = max(y for _, y in points)
        self.width = (max(x for x, _ in points) - self.min_x) * options.scale + 2 * options.margin
        self.height = (self.max_y - min(y for _, y in points)) * options.scale + 2 * options.margin

    def __call__(self, point: Point) -> Point:
        x, y = point
        scale, margin = self.options.scale, self.options.margin
        return _fmt((x - self.min_x) * scale + margin), _fmt((self.max_y - y) * scale + margin)


def _style(component: Component, options: RenderOptions) -> typing.Dict[str, typing.Any]:
    style = {
        "stroke": COLOURS[component.role.kind.value],
        "stroke_width": options.stroke_width,
        "fill": "none",
        "class_": f"component {component.role.kind.value}",
        "id": f"component-{component.id}",
    }
    if component.role.is_dotted:
        style["stroke_dasharray"] = "8,5"
    return style


def _towards(start: Point, end: Point, length: float) -> Point:
    dx, dy = end[0] - start[0], end[1] - start[1]
    distance = math.hypot(dx, dy)
    if distance <= length or distance == 0:
        return end
    return start[0] + dx * length / distance, start[1] + dy * length / distance


def _near_end(polyline: typing.Sequence[Point], point: Point) -> Point:
    """The vertex next to whichever end of the polyline lies at ``point``."""
    if len(polyline) < 2:
        return point
    head, tail = polyline[0], polyline[-1]
    if math.dist(head, point) <= math.dist(tail, point):
        return polyline[1]
    return polyline[-2]


def render_svg(d: HandleDiagram, options: RenderOptions = RenderOptions()) -> str:
    """A deterministic SVG 1.1 document of ``d``."""
    schematic = d.geometry is None or d.geometry.stale
    polylines, crossing_points = (_schematic_shapes if schematic else _geometry_shapes)(d)
    all_points = [p for points in polylines.values() for p in points] + list(crossing_points.values())
    right = max((x for x, _ in all_points), default=0.0)
    circles = _round_circles(d, right)
    for (x, y), radius in circles.values():
        all_points.extend([(x - radius, y - radius), (x + radius, y + radius)])
    canvas = _Canvas(all_points, options)
    drawing = svgwrite.Drawing(
        size=(_fmt(canvas.width), _fmt(canvas.height)), profile="full", debug=False
    )
    drawing.viewbox(0, 0, _fmt(canvas.width), _fmt(canvas.height))

    components = {c.id: c for c in d.components}
    for component in d.components:
        group = drawing.g(**_style(component, options))
        if component.id in circles:
            centre, radius = circles[component.id]
            group.add(drawing.circle(center=canvas(centre), r=_fmt(radius * options.scale)))
        else:
            for edge in component.edges:
                group.add(drawing.polyline([canvas(p) for p in polylines.get(edge, ())]))
        drawing.add(group)

    overpasses = drawing.g(id="overpasses", fill="none")
    for index, crossing in enumerate(d.crossings):
        centre = crossing_points[index]
        owner = components[d.owners[crossing.over[0]]]
        style = _style(owner, options)
        ends = [_towards(centre, _near_end(polylines[edge], centre), options.gap) for edge in crossing.over]
        segment = [canvas(ends[0]), canvas(centre), canvas(ends[1])]
        overpasses.add(drawing.polyline(segment, stroke="#ffffff", stroke_width=options.halo_width))
        kept = {key: value for key, value in style.items() if key.startswith("stroke")}
        overpasses.add(drawing.polyline(segment, **kept))
    drawing.add(overpasses)

    if options.labels:
        for component in d.components:
            anchor = _label_anchor(component, polylines, circles)
            if anchor is None:
                continue
            x, y = canvas(anchor)
            if component.role.is_framed:
                drawing.add(drawing.text(str(component.role.framing), insert=(x + 6, y - 6), class_="framing"))
            elif component.role.is_dotted:
                drawing.add(drawing.circle(center=(x, y), r=4, fill=COLOURS["dotted"], class_="dot"))
    if schematic:
        drawing.add(drawing.text("schematic", insert=(6, 14), class_="badge", font_size=12))
    return drawing.tostring()


def _label_anchor(component: Component, polylines, circles) -> typing.Optional[Point]:
    if component.id in circles:
        (x, y), radius = circles[component.id]
        return x, y + radius
    shape = polylines.get(component.edges[0])
    if not shape:
        return None
    return shape[len(shape) // 2]
