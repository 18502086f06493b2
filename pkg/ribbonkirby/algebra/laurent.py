"""Exact integer Laurent polynomials in one variable."""
import typing
from fractions import Fraction

import attr
import sympy

from ribbonkirby.errors import NotNormalizable


def _normalize(coefficients) -> typing.Tuple[typing.Tuple[int, int], ...]:
    if isinstance(coefficients, dict):
        items = coefficients.items()
    else:
        items = coefficients
    merged: typing.Dict[int, int] = {}
    for exponent, coefficient in items:
        merged[int(exponent)] = merged.get(int(exponent), 0) + int(coefficient)
    return tuple(sorted((e, c) for e, c in merged.items() if c))


@attr.s(frozen=True, repr=False)
class LaurentPoly:
    """A finite sum of integer multiples of powers of one variable.

    Zero coefficients are never stored, so equality of the coefficient
    tuples is equality of polynomials and the zero polynomial is empty.
    """

    terms: typing.Tuple[typing.Tuple[int, int], ...] = attr.ib(converter=_normalize, default=())
    variable: str = attr.ib(default="t", eq=False)

    @classmethod
    def constant(cls, value: int, variable: str = "t") -> "LaurentPoly":
        return cls({0: value}, variable)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, variable: str = "t") -> "LaurentPoly":
        return cls({exponent: coefficient}, variable)

    @classmethod
    def from_sympy(cls, expression, symbol, variable: str = "t") -> "LaurentPoly":
        """Convert a sympy Laurent expression in ``symbol`` with integer coefficients."""
        numerator, denominator = sympy.fraction(sympy.together(sympy.expand(expression)))
        denominator_poly = sympy.Poly(denominator, symbol)
        if len(denominator_poly.terms()) != 1:
            raise ValueError(f"{expression} is not a Laurent polynomial")
        ((shift,), scale) = denominator_poly.terms()[0]
        terms = {}
        for (exponent,), coefficient in sympy.Poly(numerator, symbol).terms():
            value = sympy.Rational(coefficient, scale)
            if value.q != 1:
                raise ValueError(f"{expression} has non-integral coefficients")
            terms[exponent - shift] = int(value)
        return cls(terms, variable)

    @property
    def coefficients(self) -> typing.Dict[int, int]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def max_degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def _like(self, terms) -> "LaurentPoly":
        return LaurentPoly(terms, self.variable)

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other, self.variable)
        return self._like(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return self._like([(e, -c) for e, c in self.terms])

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_coerce(other, self.variable))

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other, self.variable) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other, self.variable)
        return self._like(
            [(e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms]
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only units have negative powers")
            ((e, c),) = self.terms
            return self._like({e * exponent: c ** abs(exponent)})
        result = LaurentPoly.constant(1, self.variable)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, amount: int) -> "LaurentPoly":
        """Multiply by the monomial of degree ``amount``."""
        return self._like([(e + amount, c) for e, c in self.terms])

    def invert_variable(self) -> "LaurentPoly":
        """Substitute t ↦ t⁻¹."""
        return self._like([(-e, c) for e, c in self.terms])

    def substitute_power(self, power: int) -> "LaurentPoly":
        """Substitute t ↦ t^power."""
        return self._like([(e * power, c) for e, c in self.terms])

    def divide_exponents(self, divisor: int) -> "LaurentPoly":
        if any(e % divisor for e, _ in self.terms):
            raise ValueError(f"exponents of {self} are not all divisible by {divisor}")
        return self._like([(e // divisor, c) for e, c in self.terms])

    def is_palindromic(self) -> bool:
        return self.invert_variable() == self

    def evaluate(self, value) -> Fraction:
        """Evaluate exactly at an integer or rational point."""
        value = Fraction(value)
        return sum((c * value ** e for e, c in self.terms), Fraction(0))

    def to_sympy(self, symbol=None):
        symbol = symbol if symbol is not None else sympy.Symbol(self.variable)
        return sum((c * symbol ** e for e, c in self.terms), sympy.Integer(0))

    def to_polynomial(self, symbol) -> typing.Tuple[sympy.Poly, int]:
        """Return a genuine polynomial p and the shift s with self = t^s · p."""
        shift = self.min_degree
        poly = sympy.Poly(
            sum((c * symbol ** (e - shift) for e, c in self.terms), sympy.Integer(0)), symbol, domain="ZZ"
        )
        return poly, shift

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        symbol = sympy.Symbol("_t")
        p, p_shift = self.to_polynomial(symbol)
        q, q_shift = other.to_polynomial(symbol)
        quotient, remainder = sympy.div(p, q)
        if not remainder.is_zero:
            raise ValueError(f"{other} does not divide {self}")
        return LaurentPoly.from_sympy(quotient.as_expr(), symbol, self.variable).shift(p_shift - q_shift)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exponent, coefficient in reversed(self.terms):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = self.variable if exponent == 1 else f"{self.variable}^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value, variable: str) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value, variable)
    raise TypeError(f"cannot combine LaurentPoly with {type(value).__name__}")


def laurent_gcd(polys: typing.Iterable[LaurentPoly]) -> LaurentPoly:
    """Greatest common divisor up to units ±t^k, returned with minimal degree 0."""
    symbol = sympy.Symbol("_t")
    result = None
    variable = "t"
    for poly in polys:
        variable = poly.variable
        if poly.is_zero():
            continue
        p, _ = poly.to_polynomial(symbol)
        result = p if result is None else sympy.gcd(result, p)
    if result is None:
        return LaurentPoly((), variable)
    return LaurentPoly.from_sympy(result.as_expr(), symbol, variable)


def symmetrize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Normalize ``p`` to the unique unit multiple u·t^j·p with Δ(t) = Δ(t⁻¹) and Δ(1) = 1."""
    value = p.evaluate(1)
    if value not in (1, -1):
        raise NotNormalizable(f"{p} evaluates to {value} at t=1")
    unit = int(value)
    span = p.span
    if span % 2:
        raise NotNormalizable(f"{p} has odd span {span} and cannot be centred")
    centred = (p * unit).shift(-(p.min_degree + span // 2))
    if not centred.is_palindromic():
        raise NotNormalizable(f"{p} is not symmetric up to units")
    return centred
