"""Exact integer and Laurent-polynomial matrices."""
import typing
from fractions import Fraction

import attr
import sympy
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from ribbonkirby.algebra.laurent import LaurentPoly
from ribbonkirby.errors import NotSymmetric


def _as_rows(entries) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    return tuple(tuple(int(value) for value in row) for row in entries)


@attr.s(frozen=True, repr=False)
class IntMatrix:
    """A rectangular matrix of arbitrary precision integers."""

    entries: typing.Tuple[typing.Tuple[int, ...], ...] = attr.ib(converter=_as_rows)
    cols: int = attr.ib(default=None)

    def __attrs_post_init__(self):
        if self.cols is None:
            object.__setattr__(self, "cols", len(self.entries[0]) if self.entries else 0)
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("matrix rows have different lengths")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def diagonal(cls, values: typing.Sequence[int]) -> "IntMatrix":
        size = len(values)
        return cls([[values[i] if i == j else 0 for j in range(size)] for i in range(size)], size)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: typing.Tuple[int, int]) -> int:
        row, col = index
        return self.entries[row][col]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape} matrices")
        return IntMatrix(
            [[a + b for a, b in zip(row, other_row)] for row, other_row in zip(self.entries, other.entries)],
            self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self.entries], self.cols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, column)) for column in columns] for row in self.entries],
            other.cols,
        )

    def submatrix(self, rows: typing.Iterable[int], cols: typing.Iterable[int]) -> "IntMatrix":
        rows, cols = list(rows), list(cols)
        return IntMatrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def to_domain_matrix(self, domain=ZZ) -> DomainMatrix:
        return DomainMatrix([[domain(a) for a in row] for row in self.entries], self.shape, domain)

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def rank(self) -> int:
        if not self.rows or not self.cols:
            return 0
        return self.to_domain_matrix(QQ).rank()

    def __repr__(self) -> str:
        return f"IntMatrix({[list(row) for row in self.entries]})"


def smith_normal_form(m: IntMatrix) -> typing.Tuple[typing.List[int], int]:
    """Return the invariant factors of ``m`` padded with zeros, and its rank.

    The cokernel of ``m`` is the direct sum of Z/dᵢ over the returned factors
    together with a free part of rank ``cols - min(rows, cols)``.
    """
    size = min(m.rows, m.cols)
    if size == 0:
        return [], 0
    nonzero = [abs(int(d)) for d in invariant_factors(m.to_domain_matrix()) if int(d)]
    nonzero.sort()
    rank = len(nonzero)
    return nonzero + [0] * (size - rank), rank


def cokernel_summary(m: IntMatrix, generators: int = None) -> typing.Tuple[int, typing.List[int]]:
    """Free rank and torsion coefficients of the abelian group Z^generators / rowspace(m)."""
    generators = m.cols if generators is None else generators
    if m.rows == 0:
        return generators, []
    factors, rank = smith_normal_form(m)
    return generators - rank, [d for d in factors if d > 1]


def signature_of_symmetric(m: IntMatrix) -> int:
    """Positive minus negative inertia of a symmetric matrix by exact congruence."""
    if not m.is_symmetric():
        raise NotSymmetric(f"{m!r} is not symmetric")
    work = [[Fraction(a) for a in row] for row in m.entries]
    signature = 0
    while work:
        size = len(work)
        pivot = next((i for i in range(size) if work[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in range(size) for j in range(size) if work[i][j]), None)
            if pair is None:
                break
            # a_ii = a_jj = 0, so adding row and column j to i makes a_ii = 2·a_ij
            i, j = pair
            for k in range(size):
                work[i][k] += work[j][k]
            for k in range(size):
                work[k][i] += work[k][j]
            pivot = i
        head = work[pivot][pivot]
        signature += 1 if head > 0 else -1
        rest = [k for k in range(size) if k != pivot]
        work = [
            [work[r][c] - work[r][pivot] * work[pivot][c] / head for c in rest]
            for r in rest
        ]
    return signature


def laurent_determinant(entries: typing.Sequence[typing.Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix of Laurent polynomials by fraction-free elimination."""
    size = len(entries)
    if size == 0:
        return LaurentPoly.constant(1)
    variable = next((p.variable for row in entries for p in row), "t")
    symbol = sympy.Symbol("_t")
    ring = ZZ[symbol]
    total_shift = 0
    rows = []
    for row in entries:
        nonzero = [p for p in row if not p.is_zero()]
        if not nonzero:
            return LaurentPoly((), variable)
        shift = min(p.min_degree for p in nonzero)
        total_shift += shift
        rows.append([ring.from_sympy(p.shift(-shift).to_sympy(symbol)) for p in row])
    determinant = DomainMatrix(rows, (size, size), ring).det()
    return LaurentPoly.from_sympy(ring.to_sympy(determinant), symbol, variable).shift(total_shift)


def seifert_form_polynomial(v: IntMatrix) -> LaurentPoly:
    """det(V − tVᵀ) for a square Seifert matrix."""
    t = LaurentPoly.monomial(1)
    vt = v.transpose()
    rows = [
        [LaurentPoly.constant(v[i, j]) - t * vt[i, j] for j in range(v.cols)]
        for i in range(v.rows)
    ]
    return laurent_determinant(rows)
