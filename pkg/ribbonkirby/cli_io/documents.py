"""
Versioned JSON diagram documents.

The document layout is described by ``schema/diagram-v1.json``; loading
validates against it with jsonschema before building the diagram.
"""
import json
import typing
from pathlib import Path

import attr
import jsonschema

from ribbonkirby.cli_io.pdtext import parse_pd_text, serialize_pd_text
from ribbonkirby.diagram.model import Component, ComponentRole, Crossing, Geometry, HandleDiagram, Marker, Side
from ribbonkirby.diagram.validation import validate
from ribbonkirby.errors import ParseError, ValidationError

FORMAT = "ribbonkirby-diagram"
VERSION = 1
SCHEMA = json.loads((Path(__file__).parent / "schema" / f"diagram-v{VERSION}.json").read_text())


def _where(path: typing.Iterable) -> str:
    return "document" + "".join(f"[{step}]" if isinstance(step, int) else f".{step}" for step in path)


def _check_schema(document: typing.Mapping):
    try:
        jsonschema.validate(document, SCHEMA)
    except jsonschema.ValidationError as e:
        raise ParseError(f"{_where(e.absolute_path)}: {e.message}")


def _point(values) -> typing.Tuple[float, float]:
    x, y = values
    return float(x), float(y)


@attr.s(auto_attribs=True, frozen=True)
class DiagramDocument:
    diagram: HandleDiagram
    name: str = ""
    provenance: str = ""
    figure: typing.Optional[str] = None

    def to_document(self) -> typing.Dict[str, typing.Any]:
        d = self.diagram
        document = {
            "format": FORMAT,
            "version": VERSION,
            "metadata": {"name": self.name, "provenance": self.provenance, "figure": self.figure},
            "components": [{"id": c.id, "role": c.role.text, "edges": list(c.edges)} for c in d.components],
            "crossings": [{"edges": list(c.edges), "sign": c.sign} for c in d.crossings],
            "markers": [{"name": m.name, "edge": m.edge, "side": m.side.value} for m in d.markers],
            "geometry": None,
        }
        if d.geometry is not None:
            document["geometry"] = {
                "polylines": {
                    str(edge): [list(p) for p in points] for edge, points in sorted(d.geometry.polylines.items())
                },
                "crossings": {str(index): list(p) for index, p in sorted(d.geometry.crossings.items())},
                "stale": d.geometry.stale,
            }
        return document

    @classmethod
    def from_document(cls, document: typing.Mapping) -> "DiagramDocument":
        if not isinstance(document, dict):
            raise ParseError("a diagram document is a JSON object")
        kind, version = document.get("format", FORMAT), document.get("version", VERSION)
        if kind != FORMAT or version != VERSION:
            raise ParseError(f"unsupported document {kind!r} version {version!r}")
        _check_schema(document)
        try:
            components = [
                Component(c["id"], ComponentRole.parse(c["role"]), c["edges"]) for c in document["components"]
            ]
            crossings = [Crossing(c["edges"], c["sign"]) for c in document["crossings"]]
            markers = [Marker(m["name"], m["edge"], Side(m["side"])) for m in document.get("markers", ())]
        except (TypeError, ValueError) as e:
            raise ParseError(str(e))
        geometry = None
        if document.get("geometry") is not None:
            shape = document["geometry"]
            geometry = Geometry(
                {int(edge): tuple(_point(p) for p in points) for edge, points in shape["polylines"].items()},
                {int(index): _point(p) for index, p in shape["crossings"].items()},
                bool(shape["stale"]),
            )
        d = HandleDiagram(crossings, components, markers, geometry)
        report = validate(d)
        if not report.is_valid:
            raise ValidationError(report)
        metadata = document.get("metadata") or {}
        return cls(d, metadata.get("name", ""), metadata.get("provenance", ""), metadata.get("figure"))

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def loads(cls, text: str) -> "DiagramDocument":
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno)
        return cls.from_document(document)


def loads_diagram(text: str) -> HandleDiagram:
    """Read either format; JSON documents start with ``{``."""
    if text.lstrip().startswith("{"):
        return DiagramDocument.loads(text).diagram
    return parse_pd_text(text)


def read_diagram(path: typing.Union[str, Path]) -> HandleDiagram:
    return loads_diagram(Path(path).read_text())


def dumps_diagram(d: HandleDiagram, format: str = "json", **metadata) -> str:
    if format == "text":
        return serialize_pd_text(d)
    return DiagramDocument(d, **metadata).dumps()
