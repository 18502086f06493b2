"""
Move steps, move scripts and their replay.

A step names its kind and addresses its site explicitly by edge labels,
sides and component ids, so a replay is deterministic.  Scripts are stored
as JSON documents::

    {"steps": [{"kind": "CompositeA", "site": {"dotted": "D", "kept": "h", "merged": "h2"}}],
     "expected": "<canonical form>", "markers": ["meridian"]}
"""
import json
import typing
from enum import Enum

import attr
from eliot import ActionType, Field, MessageType

from ribbonkirby.construct.complements import disc_complement_Rn_prime, necklace_handcuffs
from ribbonkirby.construct.knots import MERIDIAN
from ribbonkirby.diagram.model import HandleDiagram, Side
from ribbonkirby.errors import PreconditionFailed, RibbonKirbyError
from ribbonkirby.moves import composites, handles, reidemeister
from ribbonkirby.moves.canonical import canonical_form


class MoveKind(Enum):
    R1_ADD = "R1+"
    R1_REMOVE = "R1-"
    R2_ADD = "R2+"
    R2_REMOVE = "R2-"
    R3 = "R3"
    SLIDE_22 = "Slide22"
    SLIDE_11 = "Slide11"
    CANCEL_12 = "Cancel12"
    COMPOSITE_A = "CompositeA"
    COMPOSITE_B = "CompositeB"
    UNWIND = "Unwind"
    ISOTOPY = "Isotopy"

    @classmethod
    def parse(cls, text: str) -> "MoveKind":
        return cls(text.replace("−", "-"))


class Isotopy(Enum):
    """The whitelisted isotopies."""

    REDUCE = "reduce"
    ROTATE = "rotate"


class Verdict(Enum):
    SUCCESS = "success"
    FAILED = "failed"
    MISMATCH = "mismatch"


APPLY = ActionType(
    "ribbonkirby:moves:apply",
    [Field("kind", lambda kind: kind.value, "The kind of the move")],
    [
        Field("crossings", int, "Crossings after the move"),
        Field("components", int, "Components after the move"),
    ],
)

RUN_SCRIPT = ActionType(
    "ribbonkirby:moves:run_script",
    [Field("steps", int, "Steps in the script")],
    [Field("verdict", lambda verdict: verdict.value, "The outcome of the replay")],
)

STEP_FAILED = MessageType(
    "ribbonkirby:moves:step_failed",
    [Field("index", int, "The failing step"), Field("error", str, "The violated precondition")],
)


@attr.s(auto_attribs=True, frozen=True)
class MoveStep:
    kind: MoveKind
    site: typing.Mapping[str, typing.Any] = attr.ib(factory=dict)

    def parameter(self, name: str):
        try:
            return self.site[name]
        except KeyError:
            raise PreconditionFailed(self.kind.value, f"the site has no {name}")

    def side(self, name: str) -> Side:
        try:
            return Side(self.parameter(name))
        except ValueError:
            raise PreconditionFailed(self.kind.value, f"{name} must be left or right")

    def path(self) -> typing.List[typing.Tuple[int, bool]]:
        return [(int(edge), bool(over)) for edge, over in self.site.get("path", ())]

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {"kind": self.kind.value, "site": dict(self.site)}

    @classmethod
    def from_document(cls, document: typing.Mapping) -> "MoveStep":
        return cls(MoveKind.parse(document["kind"]), dict(document.get("site", {})))


@attr.s(auto_attribs=True, frozen=True)
class MoveScript:
    steps: typing.Tuple[MoveStep, ...] = attr.ib(converter=tuple, default=())
    expected: typing.Optional[str] = None
    markers: typing.Tuple[str, ...] = attr.ib(converter=tuple, default=())

    def to_document(self) -> typing.Dict[str, typing.Any]:
        document = {"steps": [step.to_document() for step in self.steps], "markers": list(self.markers)}
        if self.expected is not None:
            document["expected"] = self.expected
        return document

    @classmethod
    def from_document(cls, document: typing.Mapping) -> "MoveScript":
        return cls(
            [MoveStep.from_document(step) for step in document.get("steps", ())],
            document.get("expected"),
            document.get("markers", ()),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "MoveScript":
        return cls.from_document(json.loads(text))


@attr.s(auto_attribs=True, frozen=True)
class StepRecord:
    index: int
    kind: MoveKind
    crossings: int
    components: int
    markers: typing.Mapping[str, int] = attr.ib(factory=dict)
    error: typing.Optional[str] = None

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {
            "index": self.index,
            "kind": self.kind.value,
            "crossings": self.crossings,
            "components": self.components,
            "markers": dict(self.markers),
            "error": self.error,
        }


@attr.s(auto_attribs=True, frozen=True)
class ScriptRun:
    final: HandleDiagram
    trace: typing.Tuple[StepRecord, ...] = attr.ib(converter=tuple)
    verdict: Verdict
    failure: typing.Optional[str] = None

    @property
    def succeeded(self) -> bool:
        return self.verdict is Verdict.SUCCESS

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {
            "verdict": self.verdict.value,
            "failure": self.failure,
            "trace": [record.to_document() for record in self.trace],
            "final": self.final.summary(),
        }


def _isotopy(d: HandleDiagram, step: MoveStep) -> HandleDiagram:
    try:
        name = Isotopy(step.parameter("name"))
    except ValueError:
        raise PreconditionFailed(step.kind.value, f"{step.site.get('name')} is not a whitelisted isotopy")
    if name is Isotopy.REDUCE:
        return reidemeister.simplify(d)
    return d.with_geometry_stale()


def _slide(move):
    def apply_slide(d: HandleDiagram, step: MoveStep) -> HandleDiagram:
        return move(
            d,
            step.parameter("slid"),
            step.parameter("over"),
            int(step.parameter("start")),
            step.side("start_side"),
            step.path(),
            int(step.parameter("target")),
            step.side("target_side"),
        )

    return apply_slide


_MOVES: typing.Dict[MoveKind, typing.Callable[[HandleDiagram, MoveStep], HandleDiagram]] = {
    MoveKind.R1_ADD: lambda d, s: reidemeister.add_curl(
        d, int(s.parameter("edge")), s.side("side"), int(s.parameter("sign"))
    ),
    MoveKind.R1_REMOVE: lambda d, s: reidemeister.remove_curl(d, int(s.parameter("edge")), s.side("side")),
    MoveKind.R2_ADD: lambda d, s: reidemeister.add_bigon(
        d,
        int(s.parameter("fixed")),
        s.side("fixed_side"),
        int(s.parameter("pushed")),
        s.side("pushed_side"),
        bool(s.parameter("over")),
    ),
    MoveKind.R2_REMOVE: lambda d, s: reidemeister.remove_bigon(d, int(s.parameter("edge")), s.side("side")),
    MoveKind.R3: lambda d, s: reidemeister.triangle(d, int(s.parameter("edge")), s.side("side")),
    MoveKind.SLIDE_22: _slide(handles.slide_2_over_2),
    MoveKind.SLIDE_11: _slide(handles.slide_1_over_1),
    MoveKind.CANCEL_12: lambda d, s: handles.cancel_1_2(d, s.parameter("dotted"), s.parameter("framed")),
    MoveKind.COMPOSITE_A: lambda d, s: composites.composite_a(
        d, s.parameter("dotted"), s.parameter("kept"), s.parameter("merged")
    ),
    MoveKind.COMPOSITE_B: lambda d, s: composites.composite_b(
        d, s.parameter("kept"), s.parameter("merged"), s.parameter("handle")
    ),
    MoveKind.UNWIND: lambda d, s: composites.unwind(d, s.parameter("dotted"), s.parameter("framed")),
    MoveKind.ISOTOPY: _isotopy,
}


def apply(d: HandleDiagram, step: MoveStep) -> HandleDiagram:
    """Apply one move; raises PreconditionFailed or UnknownSite when the site does not fit."""
    with APPLY(kind=step.kind) as action:
        result = _MOVES[step.kind](d, step)
        action.addSuccessFields(crossings=len(result.crossings), components=len(result.components))
        return result


def _record(index: int, step: MoveStep, d: HandleDiagram, markers, error=None) -> StepRecord:
    found = {name: marker.edge for name in markers for marker in [d.marker(name)] if marker is not None}
    return StepRecord(index, step.kind, len(d.crossings), len(d.components), found, error)


def run_script(d: HandleDiagram, script: MoveScript) -> ScriptRun:
    """Replay a script; stops at the first failing step and never raises for move failures."""
    with RUN_SCRIPT(steps=len(script.steps)) as action:
        trace = []
        verdict, failure = Verdict.SUCCESS, None
        for index, step in enumerate(script.steps):
            try:
                d = apply(d, step)
            except RibbonKirbyError as error:
                STEP_FAILED.log(index=index, error=str(error))
                trace.append(_record(index, step, d, script.markers, str(error)))
                verdict, failure = Verdict.FAILED, f"step {index} ({step.kind.value}): {error}"
                break
            trace.append(_record(index, step, d, script.markers))
        if verdict is Verdict.SUCCESS and script.expected is not None and canonical_form(d) != script.expected:
            verdict, failure = Verdict.MISMATCH, "the final diagram differs from the expected one"
        action.addSuccessFields(verdict=verdict)
        return ScriptRun(d, trace, verdict, failure)


def thm2_script(n: int) -> MoveScript:
    """The moves taking ``disc_complement_necklace(n)`` to ``disc_complement_Rn_prime(n, 0)``.

    CompositeA cancels ``D`` against the lower framed piece, one CompositeB
    per handcuff merges the stacked dotted circles back together and Unwind
    pulls the framed handle off the right circle.
    """
    steps = [MoveStep(MoveKind.COMPOSITE_A, {"dotted": "D", "kept": "h", "merged": "h2"})]
    survivor: typing.Dict[str, str] = {}
    for cuff in necklace_handcuffs(n):
        kept = survivor.get(cuff.lower, cuff.lower)
        steps.append(MoveStep(MoveKind.COMPOSITE_B, {"kept": kept, "merged": cuff.upper, "handle": cuff.ring}))
        survivor[cuff.upper] = kept
    steps.append(MoveStep(MoveKind.UNWIND, {"dotted": "R", "framed": "h"}))
    return MoveScript(steps, canonical_form(disc_complement_Rn_prime(n, 0)), [MERIDIAN])
