"""
The thin model of knot Floer gradings.

A thin knot has its knot Floer homology on a single diagonal, so the
Alexander polynomial and the signature determine it: the group in Alexander
grading s sits in Maslov grading s + σ/2 and has rank |a_s|.  Thinness and
sliceness are never checked here; callers assert them and say why.
"""
import itertools
import typing
from enum import Enum

import attr
from eliot import ActionType, Field, MessageType

from ribbonkirby.algebra.laurent import LaurentPoly
from ribbonkirby.construct.knots import twisted_band_unknot_sum
from ribbonkirby.errors import BadParameter, NotApplicable, NotSymmetric, OddSignature
from ribbonkirby.invariants.seifert import RIGHT_TREFOIL_SIGNATURE, alexander_sig_det

#: m = s + MASLOV_SHIFT · σ/2.  With the right-handed trefoil at σ = -2 this
#: puts its top generator at (s, m) = (1, 0).
MASLOV_SHIFT = 1

ALTERNATING = "alternating knots are thin"
PRETZEL_THIN = "P(n,-n,2k) is thin"
RIBBON_SLICE = "ribbon knots are slice"

FAMILY_REPORT = ActionType(
    "ribbonkirby:hfk_thin:family_report",
    [
        Field("n_values", list, "Odd numbers of half twists per column"),
        Field("k_values", list, "Full twists in the band"),
    ],
    [Field("distinguished", int, "Pairs told apart by the maximal Maslov grading")],
)

FAMILY_MEMBER = MessageType(
    "ribbonkirby:hfk_thin:family_member",
    [
        Field("n", int, "Half twists per column"),
        Field("k", int, "Full twists in the band"),
        Field("alexander", str, "The Alexander polynomial"),
        Field("signature", int, "The signature"),
        Field("max_maslov", int, "The maximal nontrivial Maslov grading"),
    ],
)

Entry = typing.Tuple[int, int, int]


@attr.s(auto_attribs=True, frozen=True)
class ThinHFKTable:
    """Entries are (Alexander grading, Maslov grading, rank) sorted by Alexander grading."""

    entries: typing.Tuple[Entry, ...] = attr.ib(converter=tuple)
    sigma: int
    thinness_assumed: typing.Optional[str] = None

    @property
    def delta(self) -> int:
        return MASLOV_SHIFT * self.sigma // 2

    @property
    def total_rank(self) -> int:
        return sum(rank for _, _, rank in self.entries)

    def is_symmetric(self) -> bool:
        """(s, m) and (-s, m - 2s) carry the same rank."""
        ranks = {(s, m): rank for s, m, rank in self.entries}
        return all(ranks.get((-s, m - 2 * s)) == rank for s, m, rank in self.entries)

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {
            "entries": [{"s": s, "m": m, "rank": rank} for s, m, rank in self.entries],
            "sigma": self.sigma,
            "thinness_assumed": self.thinness_assumed,
        }


def thin_table(alexander: LaurentPoly, sigma: int, thinness: typing.Optional[str] = None) -> ThinHFKTable:
    if not alexander.is_palindromic() or alexander.evaluate(1) != 1:
        raise NotSymmetric(f"{alexander} is not a normalized Alexander polynomial")
    if sigma % 2:
        raise OddSignature(f"a knot signature is even, got {sigma}")
    shift = MASLOV_SHIFT * sigma // 2
    entries = [
        (s, s + shift, abs(coefficient))
        for s, coefficient in sorted(alexander.coefficients.items())
        if coefficient
    ]
    return ThinHFKTable(entries, sigma, thinness)


def max_maslov_red(table: ThinHFKTable, knot_is_slice: bool) -> int:
    """The top Maslov grading, which for nontrivial thin slice knots is also that of the reduced theory."""
    if not knot_is_slice:
        raise NotApplicable("the reduced grading is only read off for slice knots")
    if len(table.entries) <= 1:
        raise NotApplicable("the knot has the table of the unknot")
    return max(m for _, m, _ in table.entries)


class Verdict(Enum):
    DISTINGUISHED = "Distinguished"
    INDISTINGUISHABLE = "Indistinguishable-by-this-invariant"


@attr.s(auto_attribs=True, frozen=True)
class FamilyMember:
    n: int
    k: int
    alexander: LaurentPoly
    signature: int
    table: ThinHFKTable
    max_maslov: int


@attr.s(auto_attribs=True, frozen=True)
class Comparison:
    first: typing.Tuple[int, int]
    second: typing.Tuple[int, int]
    verdict: Verdict


@attr.s(auto_attribs=True, frozen=True)
class FamilyReport:
    members: typing.Tuple[FamilyMember, ...] = attr.ib(converter=tuple)
    comparisons: typing.Tuple[Comparison, ...] = attr.ib(converter=tuple)

    def member(self, n: int, k: int) -> FamilyMember:
        return next(m for m in self.members if (m.n, m.k) == (n, k))

    def verdict(self, first: typing.Tuple[int, int], second: typing.Tuple[int, int]) -> Verdict:
        for comparison in self.comparisons:
            if {comparison.first, comparison.second} == {first, second}:
                return comparison.verdict
        raise KeyError((first, second))

    def tables_agree_within_n(self) -> bool:
        by_n: typing.Dict[int, typing.Set[typing.Tuple[Entry, ...]]] = {}
        for member in self.members:
            by_n.setdefault(member.n, set()).add(member.table.entries)
        return all(len(tables) == 1 for tables in by_n.values())

    def to_document(self) -> typing.Dict[str, typing.Any]:
        return {
            "members": [
                {
                    "n": m.n,
                    "k": m.k,
                    "alexander": str(m.alexander),
                    "signature": m.signature,
                    "max_maslov": m.max_maslov,
                    "table": m.table.to_document(),
                }
                for m in self.members
            ],
            "comparisons": [
                {"first": list(c.first), "second": list(c.second), "verdict": c.verdict.value}
                for c in self.comparisons
            ],
        }

    def format_table(self) -> str:
        lines = [f"{'n':>3} {'k':>3} {'sigma':>5} {'max m':>5}  alexander"]
        for m in self.members:
            lines.append(f"{m.n:>3} {m.k:>3} {m.signature:>5} {m.max_maslov:>5}  {m.alexander}")
        lines.append("")
        for c in self.comparisons:
            lines.append(f"{c.first} vs {c.second}: {c.verdict.value}")
        return "\n".join(lines)


def _check_n(n: int):
    if n < 3 or n % 2 == 0:
        raise BadParameter(f"n must be odd and at least 3, got {n}")


def family_member(n: int, k: int) -> FamilyMember:
    """P(n, -n, 2k), the band sum of two unknots, through Seifert invariants and the thin model."""
    _check_n(n)
    invariants = alexander_sig_det(twisted_band_unknot_sum((n - 1) // 2, k))
    table = thin_table(invariants.alexander, invariants.signature, PRETZEL_THIN)
    top = max_maslov_red(table, knot_is_slice=True)
    FAMILY_MEMBER.log(n=n, k=k, alexander=str(invariants.alexander), signature=invariants.signature, max_maslov=top)
    return FamilyMember(n, k, invariants.alexander, invariants.signature, table, top)


def family_report(n_values: typing.Iterable[int], k_values: typing.Iterable[int]) -> FamilyReport:
    n_values, k_values = list(n_values), list(k_values)
    for n in n_values:
        _check_n(n)
    with FAMILY_REPORT(n_values=n_values, k_values=k_values) as action:
        members = [family_member(n, k) for n in n_values for k in k_values]
        comparisons = []
        for a, b in itertools.combinations(members, 2):
            verdict = Verdict.DISTINGUISHED if a.max_maslov != b.max_maslov else Verdict.INDISTINGUISHABLE
            comparisons.append(Comparison((a.n, a.k), (b.n, b.k), verdict))
        action.addSuccessFields(
            distinguished=sum(1 for c in comparisons if c.verdict is Verdict.DISTINGUISHED)
        )
        return FamilyReport(members, comparisons)


def trefoil_calibration() -> ThinHFKTable:
    """The right-handed trefoil table under this module's conventions."""
    return thin_table(LaurentPoly({-1: 1, 0: -1, 1: 1}), RIGHT_TREFOIL_SIGNATURE, ALTERNATING)
