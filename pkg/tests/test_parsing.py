from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from realspec import DomainError, ParseError, Poly, parse_poly, parse_ring, poly_to_str
from realspec.rings import RingKind


class TestParse:
    def test_examples(self):
        assert parse_poly("(x-1)*(x+1)") == Poly([-1, 0, 1])
        assert parse_poly("1/2*x^2 - 3") == Poly([Fraction(-3), 0, Fraction(1, 2)])

    def test_double_caret(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x^^2")
        assert err.value.column == 3

    def test_precedence(self):
        # ^ binds tighter than unary minus, which binds tighter than *
        assert parse_poly("-x^2") == Poly([0, 0, -1])
        assert parse_poly("-x^2 + x^2") == Poly.zero()
        assert parse_poly("2*x+1") == Poly([1, 2])
        assert parse_poly("-2*-3") == Poly([6])

    def test_left_associative(self):
        assert parse_poly("1-2-3") == Poly([-4])
        assert parse_poly("x-x-x") == Poly([0, -1])

    def test_rational_literals(self):
        assert parse_poly("3/4") == Poly([Fraction(3, 4)])
        assert parse_poly("6/4") == Poly([Fraction(3, 2)])
        with pytest.raises(ParseError):
            parse_poly("1/0")

    def test_no_general_division(self):
        with pytest.raises(ParseError):
            parse_poly("x/2")

    def test_exponent_overflow(self):
        with pytest.raises(ParseError):
            parse_poly("x^65537")
        with pytest.raises(ParseError):
            parse_poly("x^-1")

    def test_error_columns(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x + ")
        assert err.value.column == 5
        with pytest.raises(ParseError) as err:
            parse_poly("(x+1")
        assert err.value.column == 5
        with pytest.raises(ParseError) as err:
            parse_poly("x$1")
        assert err.value.column == 2

    def test_whitespace(self):
        assert parse_poly("  x ^ 2  +  1 ") == Poly([1, 0, 1])


def coeffs():
    return st.builds(
        Fraction,
        st.integers(min_value=-50, max_value=50),
        st.integers(min_value=1, max_value=12),
    )


class TestRoundTrip:
    @given(st.lists(coeffs(), min_size=0, max_size=9).map(Poly))
    @settings(max_examples=300, deadline=None)
    def test_print_parse_round_trip(self, p):
        assert parse_poly(poly_to_str(p)) == p

    def test_specific_shapes(self):
        for text in ("0", "1", "-1", "x", "-x", "x^2 - 3*x + 1/2", "-1/2*x^7 + x"):
            p = parse_poly(text)
            assert parse_poly(poly_to_str(p)) == p


class TestRing:
    def test_base(self):
        assert parse_ring("Q[x]").kind is RingKind.BASE
        assert parse_ring(" Q[x] ").kind is RingKind.BASE

    def test_quotient(self):
        ring = parse_ring("Q[x]/(x^2-x)")
        assert ring.kind is RingKind.QUOTIENT
        assert ring.modulus == parse_poly("x^2-x")

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_ring("Z[x]")
        with pytest.raises(ParseError):
            parse_ring("Q[x]/x^2")
        with pytest.raises(DomainError):
            parse_ring("Q[x]/(2*x^2)")
        with pytest.raises(DomainError):
            parse_ring("Q[x]/(5)")
