"""Finite group presentations, Fox calculus and greedy Tietze simplification."""
import itertools
import typing
from enum import Enum

import attr
from eliot import ActionType, Field

from ribbonkirby.algebra.laurent import LaurentPoly, laurent_gcd, symmetrize_alexander
from ribbonkirby.algebra.matrices import IntMatrix, cokernel_summary, laurent_determinant
from ribbonkirby.algebra.words import FreeWord
from ribbonkirby.errors import BadAbelianization, NotNormalizable

#: The largest number of maximal minors whose gcd is taken.
MINOR_BUDGET = 24

ALEXANDER_FROM_PRESENTATION = ActionType(
    "ribbonkirby:algebra:alexander_from_presentation",
    [
        Field("generators", int, "The number of generators"),
        Field("relators", int, "The number of relators"),
    ],
    [
        Field("minors", int, "The number of minors whose gcd was taken"),
        Field("polynomial", str, "The resulting polynomial"),
    ],
)

TIETZE_SIMPLIFY = ActionType(
    "ribbonkirby:algebra:tietze_simplify",
    [Field("presentation", str, "The presentation being simplified")],
    [
        Field("status", lambda status: status.value, "How far the simplification got"),
        Field("presentation", str, "The simplified presentation"),
    ],
)


def _as_words(relators) -> typing.Tuple[FreeWord, ...]:
    return tuple(r if isinstance(r, FreeWord) else FreeWord(r) for r in relators)


@attr.s(frozen=True)
class GroupPresentation:
    """⟨x₀ … x_{g-1} | relators⟩ with optional generator names."""

    generator_count: int = attr.ib()
    relators: typing.Tuple[FreeWord, ...] = attr.ib(converter=_as_words, default=())
    names: typing.Tuple[str, ...] = attr.ib(converter=tuple, default=(), eq=False)

    @relators.validator
    def _check_relators(self, attribute, value):
        for relator in value:
            bad = [g for g in relator.generators() if not 0 <= g < self.generator_count]
            if bad:
                raise ValueError(f"relator {relator} uses unknown generators {bad}")

    def name(self, generator: int) -> str:
        return self.names[generator] if generator < len(self.names) else f"x{generator}"

    def abelianization(self) -> typing.Tuple[int, typing.List[int]]:
        """Free rank and torsion coefficients of the abelianized group."""
        matrix = IntMatrix(
            [[r.exponent_sum(g) for g in range(self.generator_count)] for r in self.relators],
            self.generator_count,
        )
        return cokernel_summary(matrix, self.generator_count)

    def __str__(self) -> str:
        generators = ", ".join(self.name(g) for g in range(self.generator_count))
        relators = ", ".join(
            "".join(self.name(g) + ("" if s > 0 else "^-1") for g, s in r) or "1" for r in self.relators
        )
        return f"<{generators} | {relators}>"


def fox_derivative(word: FreeWord, generator: int, abelianization: typing.Sequence[int]) -> LaurentPoly:
    """The abelianized Fox derivative ∂word/∂x_generator."""
    terms: typing.Dict[int, int] = {}
    degree = 0
    for g, sign in word:
        if g == generator:
            exponent = degree if sign > 0 else degree - abelianization[g]
            terms[exponent] = terms.get(exponent, 0) + sign
        degree += sign * abelianization[g]
    return LaurentPoly(terms)


def fox_jacobian(
    pres: GroupPresentation, abelianization: typing.Sequence[int]
) -> typing.List[typing.List[LaurentPoly]]:
    for relator in pres.relators:
        degree = sum(sign * abelianization[g] for g, sign in relator)
        if degree:
            raise BadAbelianization(f"relator {relator} maps to t^{degree}")
    return [
        [fox_derivative(relator, g, abelianization) for g in range(pres.generator_count)]
        for relator in pres.relators
    ]


def _minor_selections(rows: int, cols: int, order: typing.Sequence[int]):
    size = cols - 1
    for deleted in order:
        kept = [c for c in range(cols) if c != deleted]
        for chosen in itertools.combinations(range(rows), size):
            yield chosen, kept


def _normalize_up_to_units(p: LaurentPoly) -> LaurentPoly:
    try:
        return symmetrize_alexander(p)
    except NotNormalizable:
        shifted = p.shift(-p.min_degree)
        return -shifted if shifted.coefficient(shifted.max_degree) < 0 else shifted


def alexander_from_presentation(
    pres: GroupPresentation, abelianization: typing.Sequence[int], budget: int = MINOR_BUDGET
) -> LaurentPoly:
    """The gcd of the maximal minors of the abelianized Fox Jacobian.

    Only minors that drop one generator column are used; columns of generators
    mapped to t^{±1} come first, where a single minor already determines the
    polynomial of a knot group.  The result is symmetrized when it can be.
    """
    with ALEXANDER_FROM_PRESENTATION(
        generators=pres.generator_count, relators=len(pres.relators)
    ) as action:
        jacobian = fox_jacobian(pres, abelianization)
        cols = pres.generator_count
        if cols == 0:
            result = LaurentPoly.constant(1)
            action.addSuccessFields(minors=0, polynomial=str(result))
            return result
        order = sorted(range(cols), key=lambda c: (abs(abelianization[c]) != 1, abs(abelianization[c]), c))
        minors = []
        for chosen, kept in _minor_selections(len(jacobian), cols, order):
            if len(minors) >= budget:
                break
            minor = laurent_determinant([[jacobian[r][c] for c in kept] for r in chosen])
            if not minor.is_zero():
                minors.append(minor)
        result = _normalize_up_to_units(laurent_gcd(minors)) if minors else LaurentPoly()
        action.addSuccessFields(minors=len(minors), polynomial=str(result))
        return result


class TietzeStatus(Enum):
    TRIVIALIZED = "trivialized"
    REDUCED = "reduced"
    STUCK = "stuck"


def _canonical_relator(word: FreeWord) -> typing.Optional[FreeWord]:
    word = word.cyclically_reduced()
    if not word:
        return None
    candidates = list(word.rotations()) + list(word.inverse().rotations())
    return min(candidates, key=FreeWord.sort_key)


def _tidy(relators: typing.Iterable[FreeWord]) -> typing.List[FreeWord]:
    seen = set()
    tidy = []
    for relator in relators:
        canonical = _canonical_relator(relator)
        if canonical is not None and canonical not in seen:
            seen.add(canonical)
            tidy.append(canonical)
    return sorted(tidy, key=FreeWord.sort_key)


def _solvable_generator(relator: FreeWord) -> typing.Optional[typing.Tuple[int, FreeWord]]:
    """Find x occurring once in ``relator`` and return x with the word it equals."""
    counts: typing.Dict[int, int] = {}
    for g, _ in relator:
        counts[g] = counts.get(g, 0) + 1
    for position, (g, sign) in enumerate(relator.letters):
        if counts[g] != 1:
            continue
        # relator = u·x^sign·v = 1, so x^sign = u⁻¹v⁻¹
        u = FreeWord(relator.letters[:position])
        v = FreeWord(relator.letters[position + 1:])
        image = u.inverse() * v.inverse()
        return g, image if sign > 0 else image.inverse()
    return None


def tietze_simplify(
    pres: GroupPresentation, budget: int = 1000
) -> typing.Tuple[GroupPresentation, TietzeStatus]:
    """Greedily eliminate generators occurring once in a relator, shortest relator first."""
    if budget <= 0:
        raise ValueError("the step budget must be positive")
    with TIETZE_SIMPLIFY(presentation=str(pres)) as action:
        generators = list(range(pres.generator_count))
        relators = _tidy(pres.relators)
        changed = relators != list(pres.relators)
        for _ in range(budget):
            elimination = next(
                (found for found in map(_solvable_generator, relators) if found is not None), None
            )
            if elimination is None:
                break
            generator, image = elimination
            generators.remove(generator)
            relators = _tidy(r.substitute({generator: image}) for r in relators)
            changed = True
        relabel = {g: i for i, g in enumerate(generators)}
        simplified = GroupPresentation(
            len(generators),
            [r.relabel(relabel) for r in relators],
            [pres.name(g) for g in generators],
        )
        if not generators:
            status = TietzeStatus.TRIVIALIZED
        elif changed:
            status = TietzeStatus.REDUCED
        else:
            status = TietzeStatus.STUCK
        action.addSuccessFields(status=status, presentation=str(simplified))
        return simplified, status
