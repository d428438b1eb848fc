from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from beliefz.enums import Ordering
from beliefz.exceptions import ConfigError, DomainError
from beliefz.hyperreal import EPSILON, ONE, ZERO, EpsPoly, Hyperreal, hsum, poly_gcd, standard_ratio

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(coefficients, min_size=1, max_size=3).map(EpsPoly.from_dense)
nonzero_polys = polys.filter(lambda poly: not poly.is_zero)
hyperreals = st.tuples(polys, nonzero_polys).map(lambda pair: Hyperreal(*pair))

# degree at most 2 with integer coefficients up to 9: the leading term dominates at e <= 1/10^6
small_polys = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=3).map(
    EpsPoly.from_dense
)
bounded_hyperreals = st.tuples(small_polys, small_polys.filter(lambda poly: not poly.is_zero)).map(
    lambda pair: Hyperreal(*pair)
)


class TestEpsPoly:
    def test_terms_are_sorted_and_free_of_zeros(self):
        poly = EpsPoly([(2, 1), (0, 3), (1, 0), (2, Fraction(1, 2))])

        assert poly.terms == ((0, Fraction(3)), (2, Fraction(3, 2)))

    def test_valuation_and_degree(self):
        poly = EpsPoly.from_dense([0, 0, 1, 5])

        assert poly.valuation == 2
        assert poly.degree == 3

    def test_negative_exponent(self):
        with pytest.raises(DomainError):
            EpsPoly([(-1, 1)])

    def test_gcd(self):
        left = EpsPoly.from_dense([1, 1]) * EpsPoly.from_dense([0, 1])
        right = EpsPoly.from_dense([1, 1]) * EpsPoly.from_dense([2, 0, 1])

        assert poly_gcd(left, right).monic() == EpsPoly.from_dense([1, 1])

    @pytest.mark.parametrize(
        "dense,text",
        [([0], "0"), ([1], "1"), ([0, 0, Fraction(1, 4), 0, 1], "(1/4)*e^2 + e^4"), ([1, -1], "1 - e")],
        ids=["zero", "one", "fraction coefficient", "negative term"],
    )
    def test_format(self, dense, text):
        assert EpsPoly.from_dense(dense).format() == text


class TestArithmetic:
    def test_epsilon_squared(self):
        assert EPSILON * EPSILON == Hyperreal("e^2")

    def test_difference_of_squares(self):
        assert (1 + EPSILON) * (1 - EPSILON) == 1 - EPSILON**2

    def test_canonical_form_cancels_common_factors(self):
        value = Hyperreal("(e + e^2)/e")

        assert value == 1 + EPSILON
        assert value.den.is_one

    def test_denominator_is_normalised(self):
        value = Hyperreal("(2 + e)/(4 + e)")

        assert value.den.lowest_coefficient == 1
        assert value == Hyperreal("((1/2) + (1/4)*e)/(1 + (1/4)*e)")

    def test_negative_powers(self):
        assert EPSILON**-2 == ONE / EPSILON**2

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            ONE / ZERO

    def test_reciprocal_of_zero(self):
        with pytest.raises(DomainError):
            ZERO.reciprocal()

    def test_standard_values_compare_with_rationals(self):
        assert Hyperreal("3/4") == Fraction(3, 4)
        assert hash(Hyperreal("3/4")) == hash(Fraction(3, 4))

    def test_immutable(self):
        with pytest.raises(AttributeError):
            EPSILON.num = EpsPoly.constant(1)

    def test_hsum_matches_repeated_addition(self):
        values = [Hyperreal("1/(1+e)"), Hyperreal("e/(1+e)"), EPSILON**2, Fraction(1, 3)]

        assert hsum(values) == values[0] + values[1] + values[2] + values[3]
        assert hsum(values[:2]) == 1

    def test_hsum_of_nothing(self):
        assert hsum([]) == 0


class TestOrdering:
    @pytest.mark.parametrize(
        "smaller,larger",
        [
            ("0", "e"),
            ("e", "1/1000"),
            ("e^2", "e"),
            ("-e", "0"),
            ("1 - e", "1"),
            ("1", "1 + e^5"),
            ("1/(1+e)", "1"),
        ],
        ids=[
            "zero below epsilon",
            "epsilon below every positive rational",
            "higher powers are smaller",
            "negative epsilon",
            "one minus epsilon",
            "one plus a tiny term",
            "rational function",
        ],
    )
    def test_strictly_less(self, smaller, larger):
        assert Hyperreal(smaller) < Hyperreal(larger)
        assert Hyperreal(larger).compare(Hyperreal(smaller)) is Ordering.GREATER

    def test_sign(self):
        assert Hyperreal("-(1/2)*e + e^2").sign() == -1
        assert ZERO.sign() == 0


class TestStandardPart:
    def test_valuation(self):
        assert Hyperreal("(1/4)*e^3 + e^5").valuation() == 3
        assert (ONE / EPSILON).valuation() == -1

    def test_valuation_of_zero(self):
        with pytest.raises(DomainError):
            ZERO.valuation()

    def test_leading(self):
        assert Hyperreal("(1/4)*e^2 + e^3").leading() == (2, Fraction(1, 4))

    @pytest.mark.parametrize(
        "text,expected",
        [("1 + e", 1), ("e", 0), ("(2 + e)/(4 + e)", Fraction(1, 2)), ("e/(e + e^2)", 1), ("0", 0)],
        ids=["one plus epsilon", "epsilon", "quotient", "cancelled", "zero"],
    )
    def test_st(self, text, expected):
        assert Hyperreal(text).st() == expected

    def test_st_of_unlimited_value(self):
        with pytest.raises(DomainError):
            (ONE / EPSILON).st()

    def test_standard_ratio(self):
        assert standard_ratio(EPSILON, EPSILON + EPSILON**2) == 1
        assert standard_ratio(EPSILON**2, EPSILON) == 0
        with pytest.raises(DomainError):
            standard_ratio(EPSILON, EPSILON**2)

    def test_limited_and_infinitesimal(self):
        assert EPSILON.is_infinitesimal()
        assert ONE.is_limited() and not ONE.is_infinitesimal()
        assert not (ONE / EPSILON).is_limited()

    def test_evaluate(self):
        assert Hyperreal("1/(1+e)").evaluate(Fraction(1, 2)) == Fraction(2, 3)

    def test_evaluate_at_pole(self):
        with pytest.raises(DomainError):
            Hyperreal("1/e").evaluate(0)


class TestGrammar:
    @pytest.mark.parametrize(
        "text,rendered",
        [
            ("1/(1+e)", "1/(1+e)"),
            ("(1/4)*e^3 + e^5", "(1/4)*e^3 + e^5"),
            ("e^2 + (1/4) * e^3", "e^2 + (1/4)*e^3"),
            ("-1/2", "-1/2"),
            ("2*e/(1 + e)", "2*e/(1+e)"),
        ],
        ids=["reciprocal", "polynomial", "whitespace", "negative rational", "rational function"],
    )
    def test_render(self, text, rendered):
        assert str(Hyperreal(text)) == rendered

    def test_symbols_are_interchangeable(self):
        assert Hyperreal("(1/4)*g^2") == Hyperreal("(1/4)*e^2")
        assert Hyperreal("(1/4)*e^2").format(symbol="g") == "(1/4)*g^2"

    def test_unknown_render_symbol(self):
        with pytest.raises(ConfigError):
            EPSILON.format(symbol="x")

    @pytest.mark.parametrize(
        "text", ["", "e^", "2*x", "1 +", "(1 + e", "e e"], ids=["empty", "dangling caret", "unknown symbol", "dangling plus", "unbalanced", "juxtaposed"]
    )
    def test_invalid(self, text):
        with pytest.raises(ConfigError):
            Hyperreal(text)

    @pytest.mark.parametrize("text", ["1/0", "(1/0)*e"], ids=["denominator", "coefficient"])
    def test_zero_denominator(self, text):
        with pytest.raises(DomainError):
            Hyperreal(text)


class TestFieldLaws:
    @given(hyperreals, hyperreals)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @given(hyperreals, hyperreals, hyperreals)
    def test_addition_associates(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(hyperreals, hyperreals, hyperreals)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(hyperreals)
    def test_additive_inverse(self, a):
        assert a - a == ZERO

    @given(hyperreals)
    def test_multiplicative_inverse(self, a):
        assume(a)
        assert a * a.reciprocal() == ONE

    @given(hyperreals, hyperreals)
    def test_trichotomy(self, a, b):
        assert [a < b, a == b, a > b].count(True) == 1

    @given(hyperreals, hyperreals, hyperreals)
    def test_order_respects_addition(self, a, b, c):
        assume(a < b)
        assert a + c < b + c

    @given(hyperreals, hyperreals, hyperreals)
    def test_order_respects_positive_products(self, a, b, c):
        assume(a < b and c > 0)
        assert a * c < b * c

    @given(hyperreals, nonzero_polys)
    def test_canonical_form_is_unique(self, a, factor):
        assert Hyperreal(a.num * factor, a.den * factor) == a

    @given(hyperreals)
    def test_text_round_trip(self, a):
        assert Hyperreal(str(a)) == a
        assert Hyperreal(a.format(symbol="g")) == a


def sign_of(value):
    return (value > 0) - (value < 0)


@pytest.mark.parametrize("n", [10**6, 10**9], ids=["1e-6", "1e-9"])
class TestSubstitution:
    @given(a=bounded_hyperreals)
    def test_sign_matches_evaluation(self, n, a):
        assert sign_of(a.evaluate(Fraction(1, n))) == a.sign()

    @given(a=bounded_hyperreals, b=bounded_hyperreals)
    def test_order_matches_evaluation(self, n, a, b):
        point = Fraction(1, n)

        assert (a < b) == (a.evaluate(point) < b.evaluate(point))
        assert (a == b) == (a.evaluate(point) == b.evaluate(point))

    @given(a=bounded_hyperreals, b=bounded_hyperreals)
    def test_arithmetic_commutes_with_evaluation(self, n, a, b):
        point = Fraction(1, n)

        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
        assert (a - b).evaluate(point) == a.evaluate(point) - b.evaluate(point)
