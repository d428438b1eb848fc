from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd
from typing import Any, Dict, Iterable, List, Tuple

from beliefz.exceptions import DomainError
from beliefz.state import object_setattr

Term = Tuple[int, Fraction]


class EpsPoly:
    """
    Polynomial in the positive infinitesimal with exact rational coefficients.

    The terms are kept as ``(exponent, coefficient)`` pairs in strictly ascending exponent order
    and never hold a zero coefficient. The empty tuple is the zero polynomial.
    """

    __slots__ = ("terms",)

    terms: Tuple[Term, ...]

    def __init__(self, terms: Iterable[Tuple[int, Any]] = ()) -> None:
        collected: Dict[int, Fraction] = {}
        for exponent, coefficient in terms:
            if exponent < 0:
                raise DomainError(detail="Negative exponents are not stored.")
            collected[exponent] = collected.get(exponent, Fraction(0)) + Fraction(coefficient)
        object_setattr(
            self, "terms", tuple((e, c) for e, c in sorted(collected.items()) if c)
        )

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "EpsPoly":
        """
        Builds a polynomial from terms that are already ascending and free of zeros.
        """
        poly = cls.__new__(cls)
        object_setattr(poly, "terms", tuple(terms))
        return poly

    @classmethod
    def from_dense(cls, coefficients: Iterable[Any]) -> "EpsPoly":
        return cls.from_terms(
            (exponent, Fraction(value))
            for exponent, value in enumerate(coefficients)
            if value
        )

    @classmethod
    def constant(cls, value: Any) -> "EpsPoly":
        value = Fraction(value)
        return cls.from_terms(((0, value),) if value else ())

    @classmethod
    def monomial(cls, coefficient: Any, exponent: int = 1) -> "EpsPoly":
        return cls(((exponent, coefficient),))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable.")

    def __reduce__(self) -> Any:
        return (self.__class__.from_terms, (self.terms,))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def degree(self) -> int:
        """
        Highest exponent, -1 for the zero polynomial.
        """
        return self.terms[-1][0] if self.terms else -1

    @property
    def valuation(self) -> int:
        """
        Lowest exponent with a nonzero coefficient.
        """
        if not self.terms:
            raise DomainError(detail="The zero polynomial has no valuation.")
        return self.terms[0][0]

    @property
    def lowest_coefficient(self) -> Fraction:
        if not self.terms:
            raise DomainError(detail="The zero polynomial has no lowest coefficient.")
        return self.terms[0][1]

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise DomainError(detail="The zero polynomial has no leading coefficient.")
        return self.terms[-1][1]

    def coefficient(self, exponent: int) -> Fraction:
        for term_exponent, value in self.terms:
            if term_exponent == exponent:
                return value
        return Fraction(0)

    def dense(self) -> List[Fraction]:
        if not self.terms:
            return []
        values = [Fraction(0)] * (self.terms[-1][0] + 1)
        for exponent, value in self.terms:
            values[exponent] = value
        return values

    def __neg__(self) -> "EpsPoly":
        return self.from_terms((e, -c) for e, c in self.terms)

    def __add__(self, other: "EpsPoly") -> "EpsPoly":
        if not isinstance(other, EpsPoly):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        collected = dict(self.terms)
        for exponent, value in other.terms:
            collected[exponent] = collected.get(exponent, 0) + value
        return self.from_terms((e, c) for e, c in sorted(collected.items()) if c)

    def __sub__(self, other: "EpsPoly") -> "EpsPoly":
        if not isinstance(other, EpsPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "EpsPoly") -> "EpsPoly":
        if not isinstance(other, EpsPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        if self.is_one:
            return other
        if other.is_one:
            return self
        collected: Dict[int, Fraction] = {}
        for left_exponent, left in self.terms:
            for right_exponent, right in other.terms:
                exponent = left_exponent + right_exponent
                collected[exponent] = collected.get(exponent, 0) + left * right
        return self.from_terms((e, c) for e, c in sorted(collected.items()) if c)

    def scale(self, factor: Any) -> "EpsPoly":
        factor = Fraction(factor)
        if not factor:
            return ZERO
        if factor == 1:
            return self
        return self.from_terms((e, c * factor) for e, c in self.terms)

    def shift(self, places: int) -> "EpsPoly":
        """
        Multiplies by the infinitesimal raised to ``places``. Negative shifts must divide exactly.
        """
        if self.terms and self.terms[0][0] + places < 0:
            raise DomainError(detail=f"Cannot shift {self} by {places}.")
        return self.from_terms((e + places, c) for e, c in self.terms)

    def divmod(self, divisor: "EpsPoly") -> Tuple["EpsPoly", "EpsPoly"]:
        """
        Euclidean division over the rationals.
        """
        if divisor.is_zero:
            raise DomainError(detail="Polynomial division by zero.")
        remainder = self.dense()
        values = divisor.dense()
        divisor_degree = len(values) - 1
        lead = values[-1]
        if len(remainder) - 1 < divisor_degree:
            return ZERO, self

        quotient = [Fraction(0)] * (len(remainder) - divisor_degree)
        for index in range(len(remainder) - 1, divisor_degree - 1, -1):
            factor = remainder[index] / lead
            if factor:
                quotient[index - divisor_degree] = factor
                offset = index - divisor_degree
                for position, value in enumerate(values):
                    remainder[offset + position] -= factor * value
        return self.from_dense(quotient), self.from_dense(remainder)

    def exact_div(self, divisor: "EpsPoly") -> "EpsPoly":
        if divisor.is_one:
            return self
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise DomainError(detail=f"{divisor} does not divide {self}.")
        return quotient

    def monic(self) -> "EpsPoly":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient)

    def evaluate(self, point: Any) -> Fraction:
        point = Fraction(point)
        return sum((value * point**exponent for exponent, value in self.terms), Fraction(0))

    def format(self, symbol: str = "e", compact: bool = False) -> str:
        """
        Renders the polynomial in ascending exponent order, e.g. ``(1/4)*e^3 + e^5``.
        """
        if not self.terms:
            return "0"
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        parts: List[str] = []
        for exponent, value in self.terms:
            magnitude = abs(value)
            if magnitude.denominator == 1:
                coefficient = str(magnitude.numerator)
            else:
                coefficient = f"({magnitude.numerator}/{magnitude.denominator})"

            if exponent == 0:
                body = coefficient
            else:
                power = symbol if exponent == 1 else f"{symbol}^{exponent}"
                body = power if magnitude == 1 else f"{coefficient}*{power}"

            if not parts:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f"{minus if value < 0 else plus}{body}")
        return "".join(parts)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, EpsPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}('{self.format()}')"


ZERO = EpsPoly.from_terms(())
ONE = EpsPoly.from_terms(((0, Fraction(1)),))


def primitive_part(values: List[Any]) -> List[int]:
    """
    Clears the denominators of a dense coefficient list and divides by the content.
    """
    multiple = 1
    for value in values:
        denominator = Fraction(value).denominator
        multiple = multiple * denominator // int_gcd(multiple, denominator)
    integers = [int(Fraction(value) * multiple) for value in values]
    content = reduce(int_gcd, integers, 0)
    if content == 0:
        return []
    if integers[-1] < 0:
        content = -content
    return [value // content for value in integers]


def pseudo_remainder(dividend: List[int], divisor: List[int]) -> List[int]:
    remainder = list(dividend)
    divisor_degree = len(divisor) - 1
    lead = divisor[-1]
    while remainder and len(remainder) - 1 >= divisor_degree:
        top = remainder[-1]
        offset = len(remainder) - 1 - divisor_degree
        remainder = [value * lead for value in remainder]
        for position, value in enumerate(divisor):
            remainder[offset + position] -= top * value
        while remainder and remainder[-1] == 0:
            remainder.pop()
    return remainder


def poly_gcd(left: EpsPoly, right: EpsPoly) -> EpsPoly:
    """
    Monic greatest common divisor over the rationals.

    Powers of the infinitesimal are split off first; the remaining factors go through a
    primitive pseudo-remainder sequence over the integers.
    """
    if left.is_zero:
        return right.monic()
    if right.is_zero:
        return left.monic()

    power = min(left.valuation, right.valuation)
    if left.is_monomial or right.is_monomial:
        return EpsPoly.from_terms(((power, Fraction(1)),))

    first = primitive_part(left.shift(-left.valuation).dense())
    second = primitive_part(right.shift(-right.valuation).dense())
    if len(first) < len(second):
        first, second = second, first

    while second and len(second) > 1:
        remainder = pseudo_remainder(first, second)
        first, second = second, primitive_part(remainder) if remainder else []

    if second:
        # A nonzero constant remainder means the stripped parts are coprime.
        return EpsPoly.from_terms(((power, Fraction(1)),))
    return EpsPoly.from_dense(first).monic().shift(power)
