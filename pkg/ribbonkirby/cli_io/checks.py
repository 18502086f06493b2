"""
The check catalogue behind ``verify-thm1``, ``verify-thm2`` and ``verify-thm3``.

Each ``*_scenario`` function returns a scenario container; ``verify_*`` runs
it under trio and returns the ScenarioResult.
"""
import typing

import trio

from ribbonkirby.cli_io.scenarios import Check, Outcome, ScenarioContainer, ScenarioResult
from ribbonkirby.construct.casson import CassonSign, attach_casson_truncation
from ribbonkirby.construct.complements import disc_complement_necklace, disc_complement_Rn, disc_complement_Rn_prime
from ribbonkirby.construct.knots import MERIDIAN, twisted_band_unknot_sum
from ribbonkirby.diagram.model import HandleDiagram
from ribbonkirby.diagram.queries import crossings_between
from ribbonkirby.hfk_thin import Verdict, family_report
from ribbonkirby.invariants.fox import alexander_fox
from ribbonkirby.invariants.homology import describe, homology
from ribbonkirby.invariants.seifert import alexander_sig_det
from ribbonkirby.moves.scripts import MoveKind, run_script, thm2_script


def _container(name: str, checks: typing.Sequence[Check]) -> typing.Type[ScenarioContainer]:
    return type(f"{name}Container", (ScenarioContainer,), {"name": name, "checks": list(checks)})


def verify(container: typing.Type[ScenarioContainer]) -> ScenarioResult:
    return trio.run(container.scenario.run)


def _complement_structure(n: int) -> Outcome:
    counts = []
    for k in range(-2, 3):
        d = disc_complement_Rn_prime(n, k)
        counts.append((len(d.dotted), len(d.framed), crossings_between(d, "h", "L"), crossings_between(d, "h", "R")))
    return Outcome([(2, 1, 2 * n + 2, 2 * n)] * 5, counts)


def thm1_scenario(
    n_values: typing.Sequence[int], levels: int = 2, sign: CassonSign = CassonSign.POSITIVE
) -> typing.Type[ScenarioContainer]:
    """Construction of the ribbon disc complements and their Casson truncations."""
    complements: typing.Dict[int, HandleDiagram] = {}

    def surgery(n: int) -> Outcome:
        complements[n] = disc_complement_Rn(n)
        d = complements[n]
        return Outcome(f"{n} dotted circles, {n - 1} framed", f"{len(d.dotted)} dotted circles, {len(d.framed)} framed")

    def complement_homology(n: int) -> Outcome:
        summary = homology(complements[n])
        return Outcome(("Z", "Z", 0), (describe(summary.h1), describe(summary.boundary_h1), summary.euler))

    def truncation(n: int) -> Outcome:
        summary = homology(attach_casson_truncation(complements[n], MERIDIAN, levels, sign))
        return Outcome(("0", 1), (describe(summary.h1), summary.euler))

    checks = []
    for n in n_values:
        structure = Check(f"structure-{n}", lambda n=n: _complement_structure(n))
        cut = Check(f"ribbon-surgery-{n}", lambda n=n: surgery(n))
        groups = Check(f"homology-{n}", lambda n=n: complement_homology(n), requires={cut})
        casson = Check(f"casson-{n}-{levels}{sign.value}", lambda n=n: truncation(n), requires={groups})
        checks.extend([structure, cut, groups, casson])
    return _container("thm1", checks)


def thm2_scenario(n_values: typing.Sequence[int]) -> typing.Type[ScenarioContainer]:
    """Replay of the move script from the necklace picture to R_n′."""
    runs = {}

    def replay(n: int) -> Outcome:
        runs[n] = run_script(disc_complement_necklace(n), thm2_script(n))
        return Outcome("success", runs[n].verdict.value if runs[n].failure is None else runs[n].failure)

    def composition(n: int) -> Outcome:
        kinds = [step.kind for step in thm2_script(n).steps]
        counted = (kinds.count(MoveKind.COMPOSITE_A), kinds.count(MoveKind.COMPOSITE_B), kinds.count(MoveKind.UNWIND))
        return Outcome((1, n - 3, 1), counted)

    def meridian(n: int) -> Outcome:
        # a 0-framed circle at the marker must kill H1 = Z, as a meridian of the disc does
        target = disc_complement_Rn_prime(n, 0)
        expected = ("dotted", target.owners[target.marker(MERIDIAN).edge], "0")
        final = runs[n].final
        marker = final.marker(MERIDIAN)
        if marker is None:
            return Outcome(expected, None)
        owner = final.owners[marker.edge]
        capped = homology(attach_casson_truncation(final, MERIDIAN, 1))
        return Outcome(expected, (final.component(owner).role.text, owner, describe(capped.h1)))

    checks = []
    for n in n_values:
        script = Check(f"script-{n}", lambda n=n: composition(n))
        run = Check(f"replay-{n}", lambda n=n: replay(n), requires={script})
        checks.extend([script, run, Check(f"meridian-{n}", lambda n=n: meridian(n), requires={run})])
    return _container("thm2", checks)


def thm3_scenario(
    n_values: typing.Sequence[int], k_values: typing.Sequence[int]
) -> typing.Type[ScenarioContainer]:
    """The invariant pipeline: k-invariance of Δ and the maximal Maslov grading n − 1."""

    def k_invariance(n: int) -> Outcome:
        found = set()
        for k in k_values:
            d = twisted_band_unknot_sum((n - 1) // 2, k)
            found.add(str(alexander_sig_det(d).alexander))
            found.add(str(alexander_fox(d)))
        return Outcome(1, len(found))

    def grading(n: int) -> Outcome:
        report = family_report([n], k_values)
        return Outcome([n - 1] * len(k_values), [m.max_maslov for m in report.members])

    def expected_verdict(first: typing.Tuple[int, int], second: typing.Tuple[int, int]) -> str:
        return (Verdict.DISTINGUISHED if first[0] != second[0] else Verdict.INDISTINGUISHABLE).value

    def verdicts() -> Outcome:
        report = family_report(n_values, k_values)
        expected = [(c.first, c.second, expected_verdict(c.first, c.second)) for c in report.comparisons]
        return Outcome(expected, [(c.first, c.second, c.verdict.value) for c in report.comparisons])

    checks = []
    for n in n_values:
        checks.append(Check(f"alexander-k-invariance-{n}", lambda n=n: k_invariance(n)))
        checks.append(Check(f"max-maslov-{n}", lambda n=n: grading(n)))
    checks.append(Check("distinguished-across-n", verdicts, last=True))
    return _container("thm3", checks)


def verify_thm1(n_values, levels: int = 2, sign: CassonSign = CassonSign.POSITIVE) -> ScenarioResult:
    return verify(thm1_scenario(n_values, levels, sign))


def verify_thm2(n_values) -> ScenarioResult:
    return verify(thm2_scenario(n_values))


def verify_thm3(n_values, k_values) -> ScenarioResult:
    return verify(thm3_scenario(n_values, k_values))
