"""Words in free groups on indexed generators."""
import typing
from collections import deque

import attr

Letter = typing.Tuple[int, int]


def _freely_reduce(letters) -> typing.Tuple[Letter, ...]:
    stack: typing.Deque[Letter] = deque()
    for generator, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be ±1, got {sign}")
        if stack and stack[-1] == (generator, -sign):
            stack.pop()
        else:
            stack.append((int(generator), sign))
    return tuple(stack)


@attr.s(frozen=True, repr=False)
class FreeWord:
    """A freely reduced word; letters are ``(generator index, ±1)`` pairs."""

    letters: typing.Tuple[Letter, ...] = attr.ib(converter=_freely_reduce, default=())

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "FreeWord":
        return cls([(index, sign)])

    @classmethod
    def from_exponents(cls, pairs: typing.Iterable[typing.Tuple[int, int]]) -> "FreeWord":
        """Build from ``(generator, exponent)`` pairs with arbitrary integer exponents."""
        letters = []
        for generator, exponent in pairs:
            sign = 1 if exponent > 0 else -1
            letters.extend([(generator, sign)] * abs(exponent))
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord([(g, -s) for g, s in reversed(self.letters)])

    def __pow__(self, exponent: int) -> "FreeWord":
        base = self if exponent >= 0 else self.inverse()
        return FreeWord(base.letters * abs(exponent))

    def generators(self) -> typing.Set[int]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, generator: int) -> int:
        return sum(s for g, s in self.letters if g == generator)

    def cyclically_reduced(self) -> "FreeWord":
        letters = deque(self.letters)
        while len(letters) > 1 and letters[0] == (letters[-1][0], -letters[-1][1]):
            letters.popleft()
            letters.pop()
        return FreeWord(letters)

    def rotations(self) -> typing.Iterator["FreeWord"]:
        letters = self.letters
        for start in range(len(letters)):
            yield FreeWord(letters[start:] + letters[:start])

    def substitute(self, images: typing.Mapping[int, "FreeWord"]) -> "FreeWord":
        """Replace each generator by its image; unmapped generators are kept."""
        letters: typing.List[Letter] = []
        for generator, sign in self.letters:
            image = images.get(generator)
            if image is None:
                letters.append((generator, sign))
            else:
                letters.extend((image if sign > 0 else image.inverse()).letters)
        return FreeWord(letters)

    def relabel(self, mapping: typing.Mapping[int, int]) -> "FreeWord":
        return FreeWord([(mapping[g], s) for g, s in self.letters])

    def sort_key(self) -> typing.Tuple[int, typing.Tuple[Letter, ...]]:
        return len(self.letters), self.letters

    def __repr__(self) -> str:
        return f"FreeWord({self})"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{g}" if s > 0 else f"x{g}^-1" for g, s in self.letters)
