from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from starsylv import GF, Q, QI, GaussianRational, conj, scalar_arith
from starsylv.errors import Char2Rejected, DivisionByZero, FieldMismatch, ParseError
from starsylv.field import field_from_spec

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(GaussianRational, fractions, fractions)
gf7 = GF(7)
residues = st.integers(0, 6)

FIELDS = [(Q, fractions), (QI, gaussians), (gf7, residues)]


def test_examples():
    assert scalar_arith(Q("1/2"), Q("1/3"), "add") == Q("5/6")
    assert scalar_arith(GF(5)(2), GF(5)(3), "mul").value == 1
    assert scalar_arith(QI("1+i"), QI("1-i"), "mul") == QI(2)
    assert conj(Q("3/4")) == Q("3/4")
    assert conj(QI("2-5i")) == QI("2+5i")
    assert conj(gf7(4)) == gf7(4)


def test_operator_forms():
    a, b = Q(1) / 2, Q("1/3")
    assert a + b == Q("5/6")
    assert (a - b).value == Fraction(1, 6)
    assert 1 - a == a
    assert str(QI("1/2") * QI("i")) == "1/2i"


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalar_arith(Q(1), Q(0), "div")
    with pytest.raises(ZeroDivisionError):
        QI(1) / QI(0)
    with pytest.raises(DivisionByZero):
        gf7(3) / gf7(7)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        scalar_arith(Q(1), gf7(1), "add")
    with pytest.raises(FieldMismatch):
        Q(1) + QI(1)
    with pytest.raises(FieldMismatch):
        GF(3)(1) * GF(5)(1)


def test_canonical_forms():
    assert Q("6/4").value == Fraction(3, 2)
    assert Q("-6/4").value.denominator == 2
    assert gf7(-1).value == 6
    assert gf7("15").value == 1
    assert QI("2/4+6/3i").value == GaussianRational(Fraction(1, 2), 2)


@pytest.mark.parametrize("text,re_,im", [
    ("-12", -12, 0), ("3/4", Fraction(3, 4), 0), ("i", 0, 1), ("-i", 0, -1),
    ("5i", 0, 5), ("-2/3i", 0, Fraction(-2, 3)), ("1+i", 1, 1), ("1-i", 1, -1),
    ("-1/2+3/4i", Fraction(-1, 2), Fraction(3, 4)), ("+2-7i", 2, -7),
])
def test_gaussian_literals(text, re_, im):
    assert QI.parse(text) == GaussianRational(re_, im)


@pytest.mark.parametrize("field,text", [
    (Q, "1.5"), (Q, "i"), (Q, "1/0"), (QI, "i2"), (QI, "1+2"), (QI, "ii"),
    (GF(3), "1/2"), (GF(3), "x"),
])
def test_bad_literals(field, text):
    with pytest.raises(ParseError):
        field.parse(text)


def test_gf_construction():
    with pytest.raises(Char2Rejected):
        GF(2)
    assert GF(2, allow_char2=True).characteristic == 2
    with pytest.raises(ValueError):
        GF(9)
    assert field_from_spec("GF 11") == GF(11)
    assert field_from_spec(["QI"]) is QI
    with pytest.raises(Char2Rejected):
        field_from_spec("GF 2")
    with pytest.raises(ValueError):
        field_from_spec("R")


@pytest.mark.parametrize("field,elems", FIELDS)
@given(data=st.data())
def test_field_axioms(field, elems, data):
    a, b, c = (field.coerce(data.draw(elems)) for _ in range(3))
    add, mul = field.add, field.mul
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
    assert add(a, field.neg(a)) == field.zero
    if not field.is_zero(a):
        assert mul(a, field.inv(a)) == field.one
        assert field.div(mul(b, a), a) == b


@pytest.mark.parametrize("field,elems", FIELDS)
@given(data=st.data())
def test_conj_is_involutive_automorphism(field, elems, data):
    a, b = (field.coerce(data.draw(elems)) for _ in range(2))
    cj = field.conj
    assert cj(cj(a)) == a
    assert cj(field.add(a, b)) == field.add(cj(a), cj(b))
    assert cj(field.mul(a, b)) == field.mul(cj(a), cj(b))


@pytest.mark.parametrize("field,elems", FIELDS)
@given(data=st.data())
def test_format_parse_roundtrip(field, elems, data):
    a = field.coerce(data.draw(elems))
    assert field.parse(field.format(a)) == a
