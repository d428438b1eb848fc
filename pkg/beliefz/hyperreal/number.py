from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple, Union

from beliefz.enums import Ordering
from beliefz.exceptions import DomainError
from beliefz.hyperreal.polynomial import ONE as ONE_POLY
from beliefz.hyperreal.polynomial import ZERO as ZERO_POLY
from beliefz.hyperreal.polynomial import EpsPoly, poly_gcd
from beliefz.state import object_setattr

Operand = Union["Hyperreal", int, Fraction]


def _as_poly(value: Any) -> EpsPoly:
    if isinstance(value, EpsPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return EpsPoly.constant(value)
    raise TypeError(f"Cannot build a polynomial from {value.__class__.__name__}.")


def _normalized(num: EpsPoly, den: EpsPoly) -> Tuple[EpsPoly, EpsPoly]:
    """
    Scales a coprime pair so the lowest-order coefficient of the denominator is one.
    """
    if num.is_zero:
        return ZERO_POLY, ONE_POLY
    lowest = den.lowest_coefficient
    if lowest != 1:
        num, den = num.scale(1 / lowest), den.scale(1 / lowest)
    return num, den


def canonical(num: EpsPoly, den: EpsPoly) -> Tuple[EpsPoly, EpsPoly]:
    if den.is_zero:
        raise DomainError(detail="Division by zero.")
    if num.is_zero:
        return ZERO_POLY, ONE_POLY
    if not den.is_constant:
        common = poly_gcd(num, den)
        if not common.is_one:
            num, den = num.exact_div(common), den.exact_div(common)
    return _normalized(num, den)


class Hyperreal:
    """
    An element of the ordered field of rational functions in one positive infinitesimal.

    Values are stored as ``num / den`` in canonical form: the two polynomials are coprime and the
    lowest-order coefficient of ``den`` is one. The sign of a value is therefore the sign of the
    lowest-order coefficient of ``num`` and structural equality is value equality.

    Args:
        num: Numerator. A polynomial, an integer, a fraction or a textual hyperreal.
        den: Denominator. A polynomial, an integer or a fraction.
    """

    __slots__ = ("num", "den")

    num: EpsPoly
    den: EpsPoly

    def __init__(self, num: Any = 0, den: Any = 1) -> None:
        if isinstance(num, str):
            from beliefz.hyperreal.grammar import parse_hyperreal

            parsed = parse_hyperreal(num)
            num, den = parsed.num, parsed.den * _as_poly(den)
        num, den = canonical(_as_poly(num), _as_poly(den))
        object_setattr(self, "num", num)
        object_setattr(self, "den", den)

    @classmethod
    def from_canonical(cls, num: EpsPoly, den: EpsPoly = ONE_POLY) -> "Hyperreal":
        """
        Builds a value from a pair that is already in canonical form.
        """
        value = cls.__new__(cls)
        object_setattr(value, "num", num)
        object_setattr(value, "den", den)
        return value

    @classmethod
    def from_poly(cls, num: EpsPoly) -> "Hyperreal":
        return cls.from_canonical(num, ONE_POLY)

    @classmethod
    def coerce(cls, value: Any) -> "Hyperreal":
        if isinstance(value, Hyperreal):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.from_poly(EpsPoly.constant(value))
        if isinstance(value, str):
            return cls(value)
        raise TypeError(f"Cannot interpret {value!r} as a hyperreal.")

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable.")

    def __reduce__(self) -> Any:
        return (self.__class__.from_canonical, (self.num, self.den))

    @property
    def is_standard(self) -> bool:
        """
        True when the value is a plain rational.
        """
        return self.den.is_one and self.num.is_constant

    def __add__(self, other: Operand) -> "Hyperreal":
        if not isinstance(other, Hyperreal):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Hyperreal.coerce(other)
        if self.den.is_one and other.den.is_one:
            return Hyperreal.from_poly(self.num + other.num)
        if self.den == other.den:
            return Hyperreal.from_canonical(*canonical(self.num + other.num, self.den))
        return Hyperreal.from_canonical(
            *canonical(self.num * other.den + other.num * self.den, self.den * other.den)
        )

    __radd__ = __add__

    def __neg__(self) -> "Hyperreal":
        return Hyperreal.from_canonical(-self.num, self.den)

    def __pos__(self) -> "Hyperreal":
        return self

    def __sub__(self, other: Operand) -> "Hyperreal":
        if not isinstance(other, (Hyperreal, int, Fraction)):
            return NotImplemented
        return self + (-Hyperreal.coerce(other))

    def __rsub__(self, other: Operand) -> "Hyperreal":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Hyperreal.coerce(other) + (-self)

    def __mul__(self, other: Operand) -> "Hyperreal":
        if not isinstance(other, Hyperreal):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Hyperreal.coerce(other)
        if self.num.is_zero or other.num.is_zero:
            return ZERO
        if self.den.is_one and other.den.is_one:
            return Hyperreal.from_poly(self.num * other.num)

        # Cross cancellation keeps the result coprime without a gcd of the full products.
        left_common = poly_gcd(self.num, other.den)
        right_common = poly_gcd(other.num, self.den)
        num = self.num.exact_div(left_common) * other.num.exact_div(right_common)
        den = self.den.exact_div(right_common) * other.den.exact_div(left_common)
        return Hyperreal.from_canonical(*_normalized(num, den))

    __rmul__ = __mul__

    def reciprocal(self) -> "Hyperreal":
        if self.num.is_zero:
            raise DomainError(detail="Division by zero.")
        return Hyperreal.from_canonical(*_normalized(self.den, self.num))

    def __truediv__(self, other: Operand) -> "Hyperreal":
        if not isinstance(other, (Hyperreal, int, Fraction)):
            return NotImplemented
        return self * Hyperreal.coerce(other).reciprocal()

    def __rtruediv__(self, other: Operand) -> "Hyperreal":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Hyperreal.coerce(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> "Hyperreal":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sign(self) -> int:
        if self.num.is_zero:
            return 0
        return 1 if self.num.lowest_coefficient > 0 else -1

    def compare(self, other: Operand) -> Ordering:
        """
        Total order of the field: the sign of the lowest-order coefficient of ``self - other``.
        """
        return Ordering((self - Hyperreal.coerce(other)).sign())

    def __lt__(self, other: Operand) -> bool:
        if not isinstance(other, (Hyperreal, int, Fraction)):
            return NotImplemented
        return self.compare(other) is Ordering.LESS

    def __le__(self, other: Operand) -> bool:
        if not isinstance(other, (Hyperreal, int, Fraction)):
            return NotImplemented
        return self.compare(other) is not Ordering.GREATER

    def __gt__(self, other: Operand) -> bool:
        if not isinstance(other, (Hyperreal, int, Fraction)):
            return NotImplemented
        return self.compare(other) is Ordering.GREATER

    def __ge__(self, other: Operand) -> bool:
        if not isinstance(other, (Hyperreal, int, Fraction)):
            return NotImplemented
        return self.compare(other) is not Ordering.LESS

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_standard and self.num.coefficient(0) == other
        if not isinstance(other, Hyperreal):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.is_standard:
            return hash(self.num.coefficient(0))
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def valuation(self) -> int:
        """
        Order of magnitude in the infinitesimal: ``v(num) - v(den)``.
        """
        if self.num.is_zero:
            raise DomainError(detail="The valuation of zero is undefined.")
        return self.num.valuation - self.den.valuation

    def leading(self) -> Tuple[int, Fraction]:
        """
        Returns ``(v, c)`` such that the value is ``c * e^v`` up to higher order terms.
        """
        return self.valuation(), self.num.lowest_coefficient / self.den.lowest_coefficient

    def is_limited(self) -> bool:
        return self.num.is_zero or self.valuation() >= 0

    def is_infinitesimal(self) -> bool:
        return self.num.is_zero or self.valuation() > 0

    def st(self) -> Fraction:
        """
        Standard part: the unique rational infinitely close to a limited value.
        """
        if self.num.is_zero:
            return Fraction(0)
        valuation = self.valuation()
        if valuation < 0:
            raise DomainError(detail=f"The value {self} is not limited.")
        if valuation > 0:
            return Fraction(0)
        anchor = self.den.valuation
        return self.num.coefficient(anchor) / self.den.coefficient(anchor)

    def evaluate(self, point: Any) -> Fraction:
        """
        Substitutes a rational for the infinitesimal.
        """
        denominator = self.den.evaluate(point)
        if not denominator:
            raise DomainError(detail=f"{self} has a pole at {point}.")
        return self.num.evaluate(point) / denominator

    def format(self, symbol: str = "e") -> str:
        from beliefz.hyperreal.grammar import render

        return render(self, symbol=symbol)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}('{self.format()}')"


ZERO = Hyperreal.from_canonical(ZERO_POLY, ONE_POLY)
ONE = Hyperreal.from_canonical(ONE_POLY, ONE_POLY)
EPSILON = Hyperreal.from_canonical(EpsPoly.monomial(1, 1), ONE_POLY)


def standard_ratio(numerator: Hyperreal, denominator: Hyperreal) -> Fraction:
    """
    Standard part of ``numerator / denominator`` read off the two leading terms.
    """
    if not denominator:
        raise DomainError(detail="Division by zero.")
    if not numerator:
        return Fraction(0)
    top_valuation, top = numerator.leading()
    bottom_valuation, bottom = denominator.leading()
    if top_valuation < bottom_valuation:
        raise DomainError(detail=f"The ratio {numerator} / {denominator} is not limited.")
    if top_valuation > bottom_valuation:
        return Fraction(0)
    return top / bottom


def hsum(values: Iterable[Operand]) -> Hyperreal:
    """
    Exact sum of many values. Terms sharing a denominator are added as polynomials first so only
    one reduction per distinct denominator is needed.
    """
    groups: Dict[EpsPoly, EpsPoly] = {}
    for value in values:
        value = Hyperreal.coerce(value)
        if value.num.is_zero:
            continue
        groups[value.den] = groups.get(value.den, ZERO_POLY) + value.num
    total = ZERO
    for den, num in groups.items():
        if num.is_zero:
            continue
        total = total + Hyperreal.from_canonical(*canonical(num, den))
    return total
