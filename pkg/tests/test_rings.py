from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leechlab.rings import (OMEGA, OMEGA2, ONE, SQRT5, ZERO, Eisenstein, QSqrt5,
                            omega_power)

ints = st.integers(-50, 50)
eis = st.builds(Eisenstein, ints, ints)
# algebraic integers of Q(sqrt5): (a + b sqrt5)/2 with a = b mod 2
q5 = st.builds(lambda a, b: QSqrt5(a, a % 2 + 2 * b), ints, ints)


def as_complex(z: Eisenstein) -> complex:
    w = complex(-0.5, 3 ** 0.5 / 2)
    return z.a + z.b * w


def test_omega_relations():
    assert OMEGA * OMEGA + OMEGA + 1 == ZERO
    assert OMEGA ** 3 == ONE
    assert OMEGA2 == OMEGA.conj()
    assert [omega_power(k) for k in range(-1, 4)] == [OMEGA2, ONE, OMEGA, OMEGA2, ONE]


@given(eis, eis, eis)
def test_eisenstein_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == ZERO


@given(eis, eis)
def test_eisenstein_matches_complex_model(x, y):
    assert abs(as_complex(x * y) - as_complex(x) * as_complex(y)) < 1e-6
    assert abs(as_complex(x.conj()) - as_complex(x).conjugate()) < 1e-6
    assert abs(abs(as_complex(x)) ** 2 - x.norm()) < 1e-6


@given(eis, eis)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


def test_eisenstein_str():
    assert str(Eisenstein(2, 3)) == "2+3w"
    assert str(Eisenstein(-1, -1)) == "-1-w"
    assert str(Eisenstein(0, 1)) == "w"
    assert str(Eisenstein(0, -2)) == "-2w"
    assert str(Eisenstein(5, 0)) == "5"


def test_eisenstein_rejects_negative_power_and_junk():
    with pytest.raises(ValueError):
        OMEGA ** -1
    with pytest.raises(TypeError):
        Eisenstein.coerce(1.5)


@given(q5, q5, q5)
def test_qsqrt5_closed_and_associative(x, y, z):
    assert (x * y).is_integral() and (x + y).is_integral()
    assert (x * y) * z == x * (y * z)
    assert (x + y).galois() == x.galois() + y.galois()
    assert (x * y).galois() == x.galois() * y.galois()


def test_qsqrt5_basics():
    assert SQRT5 * SQRT5 == 5
    golden = QSqrt5(1, 1)
    assert golden * golden == golden + 1
    assert not QSqrt5(1, 0).is_integral()        # 1/2
    assert QSqrt5(Fraction(2), 0) == 1
    assert str(QSqrt5(-1, -1)) == "-1/2-1/2√5"
    assert str(QSqrt5(4, 0)) == "2"
    assert golden.rational_part() == Fraction(1, 2) and golden.sqrt5_part() == Fraction(1, 2)
