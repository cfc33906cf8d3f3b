from fractions import Fraction

import pytest

from modules.qseries import (SCHEMA, QSeries, QuadValue, format_qseries, parse_qseries,
                             series_to_frame, series_to_record)


def test_quadvalue_norm_product():
    x = QuadValue(1, 2, 5)
    assert x * QuadValue(1, -2, 5) == -19


def test_quadvalue_mixes_rationals_and_ints():
    x = QuadValue(Fraction(1, 2), 0, 23) + 1
    assert x == Fraction(3, 2)
    assert x.is_rational


def test_quadvalue_rejects_mixed_radicands():
    with pytest.raises(ValueError):
        QuadValue(1, 1, 2) + QuadValue(0, 1, 3)


def test_quadvalue_text():
    assert str(QuadValue(Fraction(1, 2), -3, 23)) == "1/2 - 3*sqrt(23)"
    assert str(QuadValue(0, 1, 7)) == "sqrt(7)"


def test_qseries_drops_zeros_and_out_of_range_terms():
    s = QSeries(3, {0: 1, 2: 0, 5: 7})
    assert s.coeffs == {0: 1}
    assert s[2] == 0
    with pytest.raises(IndexError):
        s[4]


def test_qseries_arithmetic_truncates_to_smaller_order():
    s = QSeries(5, {0: 1, 1: 1}) * QSeries(3, {0: 1, 1: 1})
    assert s.order == 3
    assert s.coeffs == {0: 1, 1: 2, 2: 1}
    assert (s - s).is_zero()
    assert s.scale(Fraction(1, 2))[1] == 1


def test_qseries_rational_and_sqrt_parts():
    s = QSeries(4, {1: QuadValue(2, 3, 23), 2: QuadValue(0, -1, 23)})
    assert s.rational_part().coeffs == {1: 2}
    assert s.sqrt_part().coeffs == {1: 3, 2: -1}


def test_format_qseries():
    s = QSeries(5, {1: 1, 2: -2, 4: Fraction(1, 2)})
    assert format_qseries(s) == "q - 2*q^2 + (1/2)*q^4"
    assert format_qseries(QSeries(5)) == "0"


@pytest.mark.parametrize("coeffs,expected", [
    ({1: 1.0, 2: -1.0}, "q - q^2"),
    ({1: 1.0000000001, 2: -3.72545}, "q - 3.72545*q^2"),
    ({0: 1.0, 3: -0.999999999}, "1 - q^3"),
])
def test_format_qseries_unit_float_coefficients(coeffs, expected):
    assert format_qseries(QSeries(5, coeffs)) == expected


@pytest.mark.parametrize("text,expected", [
    ("1 + 2q + 2q^4 - 3q^5", {0: 1, 1: 2, 4: 2, 5: -3}),
    ("q - 2*q^2 - 2*q^3", {1: 1, 2: -2, 3: -2}),
    ("(-1/2)q^3 + 4q^12", {3: Fraction(-1, 2)}),
])
def test_parse_qseries(text, expected):
    assert parse_qseries(text, 10).coeffs == expected


def test_parse_qseries_decimal_coefficients_become_floats():
    s = parse_qseries("q - 3.72545q^2", 5)
    assert isinstance(s[2], float)
    assert s[2] == pytest.approx(-3.72545)


def test_parse_qseries_rejects_garbage():
    with pytest.raises(ValueError):
        parse_qseries("1 + 2x^3", 5)


def test_series_record_and_frame():
    s = QSeries(3, {0: 1, 2: QuadValue(Fraction(1, 4), 2, 23)})
    record = series_to_record(s, kind="test")
    assert record["schema"] == SCHEMA
    assert record["kind"] == "test"
    assert record["coeffs"][0] == {"m": 0, "c": {"num": 1, "den": 1}}
    assert record["coeffs"][1]["c"] == {"r": {"num": 1, "den": 4}, "s": {"num": 2, "den": 1}, "D": 23}

    df = series_to_frame(s)
    assert list(df.columns) == ["m", "r_num", "r_den", "s_num", "s_den"]
    assert df.iloc[1].tolist() == [2, 1, 4, 2, 1]
