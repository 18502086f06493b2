"""
The ``ribbonkirby`` command.

Exit codes: 0 when every check passes, 1 when a check or a replay fails,
2 for usage errors and unreadable input.
"""
import argparse
import json
import sys
import typing
from pathlib import Path

import eliot

from ribbonkirby.cli_io.checks import verify_thm1, verify_thm2, verify_thm3
from ribbonkirby.cli_io.documents import dumps_diagram, read_diagram
from ribbonkirby.cli_io.svg import RenderOptions, render_svg
from ribbonkirby.construct import (
    MERIDIAN,
    CassonSign,
    attach_casson_truncation,
    disc_complement_alt,
    disc_complement_necklace,
    disc_complement_Rn,
    disc_complement_Rn_prime,
    load_fixture,
    pretzel,
    ribbon_surgery,
    symmetric_ribbon_fixture,
    torus_2n,
    twisted_band_unknot_sum,
    unknot,
)
from ribbonkirby.diagram.model import HandleDiagram
from ribbonkirby.errors import RibbonKirbyError
from ribbonkirby.hfk_thin import family_report
from ribbonkirby.invariants import alexander_fox, alexander_sig_det, homology, jones, jones_in_t, pi1
from ribbonkirby.moves.scripts import MoveScript, run_script

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def integers(text: str) -> typing.List[int]:
    """Read ``3,5,7``, ``-2..2`` or a mix such as ``3,7..11``."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                start, _, stop = part.partition("..")
                values.extend(range(int(start), int(stop) + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("an empty integer list")
    return values


def _single(values: typing.List[int], flag: str) -> int:
    if len(values) != 1:
        raise UsageError(f"{flag} takes a single value here")
    return values[0]


def _ribbon_complement(n: int, k: int) -> HandleDiagram:
    fixture = symmetric_ribbon_fixture(n, k)
    return ribbon_surgery(fixture.diagram, fixture.bands)


BUILDERS: typing.Dict[str, typing.Callable[[argparse.Namespace], HandleDiagram]] = {
    "unknot": lambda args: unknot(),
    "torus": lambda args: torus_2n(_single(args.n, "--n")),
    "pretzel": lambda args: pretzel(_single(args.n, "--n"), -_single(args.n, "--n"), 2 * _single(args.k, "--k")),
    "band-sum": lambda args: twisted_band_unknot_sum((_single(args.n, "--n") - 1) // 2, _single(args.k, "--k")),
    "rn-prime": lambda args: disc_complement_Rn_prime(_single(args.n, "--n"), _single(args.k, "--k")),
    "rn": lambda args: disc_complement_Rn(_single(args.n, "--n")),
    "alt": lambda args: disc_complement_alt(_single(args.n, "--n")),
    "necklace": lambda args: disc_complement_necklace(_single(args.n, "--n")),
    "ribbon": lambda args: _ribbon_complement(_single(args.n, "--n"), _single(args.k, "--k")),
    "casson": lambda args: attach_casson_truncation(
        _ribbon_complement(_single(args.n, "--n"), _single(args.k, "--k")), MERIDIAN, args.levels, args.sign
    ),
}


def _emit(args: argparse.Namespace, document: typing.Any, text: str):
    output = json.dumps(document, indent=2, sort_keys=True) + "\n" if args.format == "json" else text + "\n"
    if args.out:
        Path(args.out).write_text(output)
    else:
        sys.stdout.write(output)


def build(args: argparse.Namespace) -> int:
    try:
        if args.family.startswith("fixture:"):
            d = load_fixture(args.family.partition(":")[2]).diagram
        else:
            d = BUILDERS[args.family](args)
    except KeyError as e:
        raise UsageError(f"unknown family or fixture {e}")
    output = dumps_diagram(d, args.format, name=args.family)
    if args.out:
        Path(args.out).write_text(output)
    else:
        sys.stdout.write(output)
    return EXIT_PASSED


def invariants(args: argparse.Namespace) -> int:
    d = read_diagram(args.diagram)
    document: typing.Dict[str, typing.Any] = {"summary": d.summary()}
    if d.dotted:
        summary = homology(d)
        document.update(
            pi1=str(pi1(d)),
            h1=list(summary.h1),
            boundary_h1=list(summary.boundary_h1),
            euler=summary.euler,
            b2=summary.b2,
            alexander=str(alexander_fox(d)),
        )
        text = f"pi1 = {document['pi1']}\n{summary}\nalexander = {document['alexander']}"
    else:
        knot = alexander_sig_det(d)
        document.update(
            jones=str(jones_in_t(jones(d))),
            alexander=str(knot.alexander),
            signature=knot.signature,
            determinant=knot.determinant,
        )
        text = "\n".join(f"{key} = {document[key]}" for key in ("jones", "alexander", "signature", "determinant"))
    _emit(args, document, text)
    return EXIT_PASSED


def apply_script(args: argparse.Namespace) -> int:
    d = read_diagram(args.diagram)
    try:
        script = MoveScript.loads(Path(args.script).read_text())
    except (ValueError, KeyError) as e:
        raise UsageError(f"cannot read the move script: {e}")
    run = run_script(d, script)
    text = "\n".join(
        [f"{run.verdict.value}" + (f": {run.failure}" if run.failure else "")]
        + [f"  {r.index:>3} {r.kind.value:<10} crossings={r.crossings} components={r.components}" for r in run.trace]
    )
    _emit(args, run.to_document(), text)
    return EXIT_PASSED if run.succeeded else EXIT_FAILED


def _scenario(run: typing.Callable[[argparse.Namespace], typing.Any]) -> typing.Callable[[argparse.Namespace], int]:
    def command(args: argparse.Namespace) -> int:
        result = run(args)
        _emit(args, result.to_document(), result.format_text())
        return EXIT_PASSED if result.passed else EXIT_FAILED

    return command


def hfk_report(args: argparse.Namespace) -> int:
    report = family_report(args.n, args.k)
    _emit(args, report.to_document(), report.format_table())
    return EXIT_PASSED


def render(args: argparse.Namespace) -> int:
    svg = render_svg(read_diagram(args.diagram), RenderOptions(labels=not args.no_labels))
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg + "\n")
    return EXIT_PASSED


def parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="ribbonkirby", description="Kirby calculus checks for ribbon disc complements"
    )
    root.add_argument("--log", metavar="PATH", help="write eliot logs to PATH, or to stderr when PATH is '-'")
    commands = root.add_subparsers(dest="command", required=True)

    def command(name: str, handler, summary: str, **defaults) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=summary)
        sub.add_argument("--format", choices=("json", "text"), default="json")
        sub.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
        sub.set_defaults(handler=handler)
        for flag, (kind, default) in defaults.items():
            sub.add_argument(f"--{flag}", type=kind, default=default)
        return sub

    sub = command("build", build, "construct a diagram", n=(integers, [3]), k=(integers, [0]), levels=(int, 2))
    sub.add_argument("family", help=f"one of {', '.join(sorted(BUILDERS))} or fixture:<name>")
    sub.add_argument("--sign", type=CassonSign, choices=list(CassonSign), metavar="{+,-}", default=CassonSign.POSITIVE)

    command("invariants", invariants, "knot or handle diagram invariants").add_argument("diagram")

    sub = command("apply-script", apply_script, "replay a move script")
    sub.add_argument("diagram")
    sub.add_argument("script")

    sub = command(
        "verify-thm1",
        _scenario(lambda args: verify_thm1(args.n, args.levels, args.sign)),
        "ribbon complements and Casson truncations",
        n=(integers, [3, 5, 7]),
        levels=(int, 2),
    )
    sub.add_argument("--sign", type=CassonSign, choices=list(CassonSign), metavar="{+,-}", default=CassonSign.POSITIVE)
    command(
        "verify-thm2", _scenario(lambda args: verify_thm2(args.n)), "move script replay", n=(integers, [3, 5, 7])
    )
    command(
        "verify-thm3",
        _scenario(lambda args: verify_thm3(args.n, args.k)),
        "Alexander invariance and maximal Maslov grading",
        n=(integers, [3, 5, 7]),
        k=(integers, [-2, -1, 0, 1, 2]),
    )
    command(
        "hfk-report",
        hfk_report,
        "thin knot Floer tables of the band sums",
        n=(integers, [3, 5, 7]),
        k=(integers, [-2, -1, 0, 1, 2]),
    )

    sub = command("render", render, "draw a diagram as SVG")
    sub.add_argument("diagram")
    sub.add_argument("--no-labels", action="store_true")
    return root


def _start_logging(destination: typing.Optional[str]):
    if destination is None:
        return None
    if destination == "-":
        eliot.to_file(sys.stderr)
        return None
    handle = open(destination, "a")
    eliot.to_file(handle)
    return handle


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_PASSED if e.code == 0 else EXIT_USAGE
    log = _start_logging(args.log)
    try:
        return args.handler(args)
    except (UsageError, RibbonKirbyError, OSError) as e:
        sys.stderr.write(f"ribbonkirby {args.command}: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    finally:
        if log is not None:
            log.close()


if __name__ == "__main__":
    sys.exit(main())
