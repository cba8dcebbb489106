import pytest
from hypothesis import given, settings, strategies as st

from sympcoh.exterior import (ExteriorForm, FormParseError, degree_masks, parse_form,
                              wedge_sign)
from sympcoh.linalg import ratio


def test_wedge_antisymmetry():
    e1 = ExteriorForm.basis(6, (1,))
    e2 = ExteriorForm.basis(6, (2,))
    assert e1.wedge(e2) == ExteriorForm.basis(6, (1, 2))
    assert e2.wedge(e1) == -ExteriorForm.basis(6, (1, 2))
    assert e1.wedge(e1).is_zero()


def test_wedge_sign_values():
    assert wedge_sign(0b10, 0b01) == -1   # e2 ∧ e1
    assert wedge_sign(0b01, 0b10) == 1
    assert wedge_sign(0b01, 0b01) == 0


def test_parse_written_order_keeps_sign():
    f = parse_form("13+42", 6)
    assert f.coefficient(0b000101) == 1       # e13
    assert f.coefficient(0b001010) == -1      # e42 = -e24


def test_parse_rational_coefficients():
    f = parse_form("e12 + 3*e34 - 1/2*e56", 6)
    assert f.coefficient(0b000011) == 1
    assert f.coefficient(0b001100) == 3
    assert f.coefficient(0b110000) == ratio(-1, 2)


def test_parse_zero_needs_degree():
    assert parse_form("0", 6, degree=2).is_zero()
    with pytest.raises(FormParseError):
        parse_form("0", 6)


@pytest.mark.parametrize("bad", ["17", "142", "x12", "1/2e34", "12+", "00", "11"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(FormParseError):
        parse_form(bad, 6, degree=2)


def test_parse_degree_mismatch():
    with pytest.raises(FormParseError):
        parse_form("12+134", 6)


def test_str_parse_roundtrip():
    for text in ["13+24", "e16 + 2*e25 + e34", "-16-25+34", "2*14+15+16+24-26+34-35"]:
        f = parse_form(text, 6)
        assert parse_form(str(f), 6) == f


def test_vector_roundtrip():
    f = parse_form("12-2*56", 6)
    assert ExteriorForm.from_vector(6, 2, f.to_vector()) == f
    assert len(f.to_vector()) == len(degree_masks(6, 2)) == 15


masks_by_degree = {q: degree_masks(5, q) for q in range(6)}


@st.composite
def random_form(draw, n=5, degree=None):
    q = degree if degree is not None else draw(st.integers(min_value=0, max_value=3))
    coeffs = {}
    for mask in masks_by_degree[q]:
        c = draw(st.integers(min_value=-3, max_value=3))
        if c:
            coeffs[mask] = c
    return ExteriorForm(n, q, coeffs)


@settings(max_examples=60, deadline=None)
@given(random_form(), random_form())
def test_graded_commutativity(a, b):
    ab = a.wedge(b)
    ba = b.wedge(a)
    sign = (-1) ** (a.degree * b.degree)
    assert ab == (ba if sign > 0 else -ba)


@settings(max_examples=40, deadline=None)
@given(random_form(degree=1), random_form(degree=1), random_form(degree=2))
def test_associativity(a, b, c):
    assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))
