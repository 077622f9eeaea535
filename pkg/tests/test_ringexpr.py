import pytest

from totalgraph.ring import GaloisField, Modular, Product, QuotientBivariateSquare, QuotientUnivariate, spec_name
from totalgraph.ringexpr import ParseError, parse_ring_expression as parse


def test_quotient():
    assert parse("Z4[x]/(2x,x^2)") == QuotientUnivariate(Modular(4), ((0, 2), (0, 0, 1)))


def test_product():
    assert parse("Z2xZ2xZ2") == Product((Modular(2), Modular(2), Modular(2)))


def test_forms():
    assert parse("F4") == GaloisField(4)
    assert parse("Z2[x,y]/(x,y)^2") == QuotientBivariateSquare(Modular(2))
    assert parse(" z4 [X] / ( x^2 + x + 1 ) ") == QuotientUnivariate(Modular(4), ((1, 1, 1),))
    assert parse("Z4[x]/(2*x, x^2 - 2)") == QuotientUnivariate(Modular(4), ((0, 2), (-2, 0, 1)))
    assert parse("Z2xF4") == Product((Modular(2), GaloisField(4)))


@pytest.mark.parametrize(
    "text", ["Z8", "F4", "Z4[x]/(2x,x^2)", "Z4[x]/(x^2+x+1)", "Z2[x,y]/(x,y)^2", "Z2xF4", "Z2xZ2xZ2", "F4[x]/(x^2)"]
)
def test_round_trip(text):
    assert spec_name(parse(text)) == text
    assert parse(spec_name(parse(text))) == parse(text)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("F6", "prime power"),
        ("Z1", ""),
        ("Z2xxZ3", ""),
        ("Z2x", ""),
        ("Z4[x]/(2x+)", ""),
        ("F4[x]/(x^2,x)", ""),
        ("Q5", ""),
        ("", ""),
    ],
)
def test_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert "position" in str(info.value)
    assert fragment in str(info.value)


def test_error_position_points_at_token():
    with pytest.raises(ParseError) as info:
        parse("Z2 x F6")
    assert info.value.pos == 6
