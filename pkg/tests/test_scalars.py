from fractions import Fraction

import pytest

from amenalyzer.scalars import ZERO, QQi, pair_str, parse_pair, qq


def test_exact_arithmetic_is_lossless():
    a = qq("1/3", "2/7")
    b = qq("-0.5", "1")
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a - a == ZERO


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        qq(1) / ZERO


def test_parse_decimal_strings_exactly():
    assert parse_pair(["-0.5", "0"]) == qq(Fraction(-1, 2))
    assert parse_pair(["1/3", "2"]) == QQi(Fraction(1, 3), 2)


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        parse_pair([0.5, 0])


def test_pair_str_round_trip():
    x = qq("22/7", "-3")
    assert parse_pair(pair_str(x)) == x


def test_str_forms():
    assert str(qq(1)) == "1"
    assert str(qq(0, 1)) == "1i"
    assert str(qq("1/2", "-3/4")) == "1/2-3/4i"


def test_hash_consistency():
    assert hash(qq("2/4")) == hash(qq("1/2"))
    assert qq("2/4") == qq("1/2")
