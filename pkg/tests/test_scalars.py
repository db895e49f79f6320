"""Field arithmetic: exactness, canonical forms, unit certificates."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from descent_kit import GF, QQ, PresentedRing, scalar_arith
from descent_kit.errors import DivisionByZero, NotAUnit

F5 = GF(5)


def test_div_exact_rational():
    assert scalar_arith("div", QQ, 1, 3) == Fraction(1, 3)


def test_mul_mod_five():
    assert scalar_arith("mul", F5, 2, 3) == 1


def test_add_rationals():
    assert scalar_arith("add", QQ, Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalar_arith("div", QQ, 1, 0)
    with pytest.raises(DivisionByZero):
        F5.inv(F5.zero)


def test_prime_field_requires_prime():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(2**63 + 9)


def test_residues_canonical():
    assert F5.normalize(-1) == 4
    assert F5.normalize(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5


rationals = st.fractions(max_denominator=10**4)
residues = st.integers(min_value=0, max_value=4)


@given(rationals, rationals)
def test_rational_field_axioms(a, b):
    a, b = QQ.normalize(a), QQ.normalize(b)
    assert QQ.add(a, b) == QQ.add(b, a)
    assert QQ.mul(a, b) == QQ.mul(b, a)
    if not QQ.is_zero(b):
        assert QQ.mul(QQ.mul(a, b), QQ.inv(b)) == a


@given(residues, residues)
def test_prime_field_axioms(a, b):
    assert F5.add(a, b) == F5.add(b, a)
    assert F5.mul(a, b) == F5.mul(b, a)
    if not F5.is_zero(b):
        assert F5.mul(F5.mul(a, b), F5.inv(b)) == a


# ----- unit certificates in presented rings -----


def test_unit_inverse_square_root_of_two():
    ring = PresentedRing.make(QQ, ("x",), [PresentedRing.make(QQ, ("x",), []).el("x^2-2")])
    inv = ring.unit_inverse(ring.var("x"))
    assert ring.render(inv) == "1/2*x"
    assert ring.equal(ring.var("x") * inv, ring.one)


def test_polynomial_variable_is_not_a_unit():
    ring = PresentedRing.make(QQ, ("x",), [])
    with pytest.raises(NotAUnit):
        ring.unit_inverse(ring.var("x"))


def test_one_is_its_own_inverse():
    for ring in (
        PresentedRing.base_field(QQ),
        PresentedRing.make(F5, ("y",), []),
    ):
        assert ring.unit_inverse(ring.one) == ring.one


def test_unit_certificate_verifies():
    ring = PresentedRing.make(F5, ("x",), [PresentedRing.make(F5, ("x",), []).el("x^3-2")])
    a = ring.el("x+1")
    inv = ring.unit_inverse(a)
    assert ring.equal(a * inv, ring.one)
    # x^2+1 vanishes at the root 3 of x^3-2, so it is a zero divisor
    with pytest.raises(NotAUnit):
        ring.unit_inverse(ring.el("x^2+1"))
