from fractions import Fraction

import pytest

from colorgder import GF, QQ, Mod
from colorgder.field import field_from_doc


def test_rational_parse_and_format():
    assert QQ.parse("6/4") == Fraction(3, 2)
    assert QQ.parse(" -2 ") == -2
    assert QQ.format(Fraction(-3, 6)) == "-1/2"
    assert QQ.format(Fraction(4, 2)) == "2"


def test_prime_field_residues():
    F = GF(7)
    assert F(10) == Mod(3, 7)
    assert F.parse("1/2") * 2 == F.one
    assert F(-1).v == 6
    assert F.format(F(-1)) == "6"
    assert F(3) ** -1 == F(5)


def test_prime_field_rejects_composite_and_bad_denominators():
    with pytest.raises(ValueError):
        GF(9)
    with pytest.raises(ZeroDivisionError):
        GF(5).parse("1/5")
    with pytest.raises(TypeError):
        QQ(Mod(1, 5))


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Mod(1, 5) + Mod(1, 7)


def test_field_docs_round_trip():
    assert field_from_doc(QQ.to_doc()) == QQ
    assert field_from_doc(GF(11).to_doc()) == GF(11)
    assert field_from_doc(None) == QQ
    with pytest.raises(ValueError):
        field_from_doc({"kind": "R"})
