"""
Figure fixtures.

A fixture is a JSON document holding Morse events, component roles, markers
and fine bands.  Markers and bands refer to edges through the tags of the
events, so a transcription stays readable next to its figure.
"""
import json
import typing
from pathlib import Path

import attr

from ribbonkirby.construct.knots import pretzel_layout
from ribbonkirby.construct.morse import MorseBuilder, MorseLayout
from ribbonkirby.construct.ribbon import BandSpec
from ribbonkirby.diagram.model import ComponentRole, HandleDiagram, Side
from ribbonkirby.errors import BadParameter

FIXTURES = Path(__file__).parent / "figures"


@attr.s(auto_attribs=True, frozen=True)
class Fixture:
    name: str
    layout: MorseLayout
    bands: typing.Tuple[BandSpec, ...] = attr.ib(converter=tuple, default=())
    figure: typing.Optional[str] = None
    description: str = ""

    @property
    def diagram(self) -> HandleDiagram:
        return self.layout.diagram


def _band(layout: MorseLayout, band: typing.Mapping) -> BandSpec:
    return BandSpec(
        layout.edge(band["start"]),
        layout.edge(band["end"]),
        Side(band.get("side", Side.LEFT.value)),
        [(layout.edge(tag), over) for tag, over in band.get("path", ())],
        band.get("half_twists", 0),
    )


def fixture_from_document(document: typing.Mapping) -> Fixture:
    builder = MorseBuilder.from_events(
        document["events"],
        roles={component: ComponentRole.parse(role) for component, role in document.get("roles", {}).items()},
        markers=[(name, tag, Side(side)) for name, tag, side in document.get("markers", ())],
    )
    layout = builder.build()
    return Fixture(
        document["name"],
        layout,
        [_band(layout, band) for band in document.get("bands", ())],
        document.get("figure"),
        document.get("description", ""),
    )


def available_fixtures() -> typing.List[str]:
    return sorted(path.stem for path in FIXTURES.glob("*.json"))


def load_fixture(name: str) -> Fixture:
    path = FIXTURES / f"{name}.json"
    if not path.exists():
        raise KeyError(f"no fixture named {name}")
    return fixture_from_document(json.loads(path.read_text()))


def symmetric_ribbon_fixture(n: int, k: int = 0, single: bool = False) -> Fixture:
    """The ribbon recipes of the fixtures generalised to P(n, -n, 2k).

    With ``single`` the one band cuts the third column; otherwise n-1 bands
    join the two twist columns between consecutive crossings.
    """
    if n < 3 or n % 2 == 0:
        raise BadParameter(f"n must be odd and at least 3, got {n}")
    layout = pretzel_layout(n, -n, 2 * k)
    if single:
        bands = [BandSpec(layout.edge("band-left"), layout.edge("band-right"))]
    else:
        bands = [BandSpec(layout.edge(f"left-gap-{i}"), layout.edge(f"right-gap-{i}")) for i in range(1, n)]
    return Fixture(f"ribbon-{n}-{k}{'-single' if single else ''}", layout, bands)
