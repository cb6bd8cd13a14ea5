from fractions import Fraction
from math import pi, sqrt

import numpy as np
import pytest

from mockform.arithmetic import is_fundamental_discriminant, kronecker_symbol
from mockform.characters import (
    QuadraticCharacter,
    functional_equation_residual,
    gauss_sum,
    l_exact_neg,
    l_numeric,
    root_number,
)

FUNDAMENTAL = [d for d in range(-100, 101) if d != 0 and is_fundamental_discriminant(d)]


def test_character_values():
    chi1 = QuadraticCharacter(1)
    assert all(chi1(a) == 1 for a in range(-20, 21))
    assert QuadraticCharacter(-4)(3) == -1
    assert QuadraticCharacter(-3)(2) == kronecker_symbol(-3, 2) == -1
    with pytest.raises(ValueError):
        QuadraticCharacter(6)


def test_parity_and_periodicity():
    for d in FUNDAMENTAL:
        chi = QuadraticCharacter(d)
        assert chi.is_even == (chi(-1) == 1) == (d > 0)
        for a in range(-15, 16):
            assert chi(a + chi.modulus) == chi(a)


def test_gauss_sum_closed_form():
    assert gauss_sum(QuadraticCharacter(1)) == 1
    assert abs(gauss_sum(QuadraticCharacter(-4)) - 2j) < 1e-12
    assert abs(gauss_sum(QuadraticCharacter(5)) - sqrt(5)) < 1e-12
    for d in FUNDAMENTAL:
        tau = gauss_sum(QuadraticCharacter(d))
        expect = sqrt(d) if d > 0 else 1j * sqrt(-d)
        assert abs(tau - expect) < 1e-10, d


def test_root_number_is_one():
    for d in FUNDAMENTAL:
        assert abs(root_number(QuadraticCharacter(d)) - 1) < 1e-10


def test_l_numeric_catalan():
    # independent oracle: alternating series 1 - 1/9 + 1/25 - ... summed directly
    n = np.arange(0, 2_000_000)
    catalan = float(((-1.0) ** n / (2 * n + 1) ** 2).sum())
    assert abs(l_numeric(QuadraticCharacter(-4), 2.0) - catalan) < 1e-12


def test_l_numeric_at_one():
    # closed form L(1, chi_{-3}) = pi / (3 sqrt(3)); direct partial-sum oracle
    assert abs(l_numeric(QuadraticCharacter(-3), 1.0) - pi / (3 * sqrt(3))) < 1e-13
    q = 3
    n = np.arange(1, 3_000_001)
    chi = np.array([0, 1, -1])[n % q]
    partial = float((chi / n).sum())
    assert abs(l_numeric(QuadraticCharacter(-3), 1.0) - partial) < 1e-5


def test_l_numeric_principal_is_zeta():
    from mockform.arithmetic import zeta_numeric
    assert l_numeric(QuadraticCharacter(1), 2.0) == zeta_numeric(2.0)
    assert abs(l_numeric(QuadraticCharacter(1), 2.0) - pi ** 2 / 6) < 1e-13
    with pytest.raises(ValueError):
        l_numeric(QuadraticCharacter(1), 0.9)


def test_l_numeric_near_one_against_hurwitz_zeta():
    from scipy.special import zeta as scipy_zeta
    for d in (-3, -4, 5, -20, 13):
        chi = QuadraticCharacter(d)
        q = chi.modulus
        for s in (1.0002, 1.5, 2.0, 4.0):
            ref = sum(chi(a) * scipy_zeta(s, a / q) for a in range(1, q + 1)) * q ** -s
            assert abs(l_numeric(chi, s) - ref) < 1e-11, (d, s)


def test_l_exact_neg():
    assert l_exact_neg(QuadraticCharacter(1), 1) == Fraction(-1, 2)
    assert l_exact_neg(QuadraticCharacter(1), 2) == Fraction(-1, 12)
    assert l_exact_neg(QuadraticCharacter(-4), 1) == Fraction(1, 2)
    # parity: L(1-r, chi) = 0 when chi(-1) != (-1)^r (non-principal)
    assert l_exact_neg(QuadraticCharacter(-4), 2) == 0
    assert l_exact_neg(QuadraticCharacter(5), 1) == 0
    assert l_exact_neg(QuadraticCharacter(5), 2) != 0


def test_functional_equation_residuals():
    for d in (-4, -3, 5):
        assert functional_equation_residual(QuadraticCharacter(d), 2.0) < 1e-8


def test_functional_equation_across_discriminants():
    # exact negative values agree with the numeric side through the
    # completed-L relation for r = 1, 2, 3 and |d| <= 24
    for d in [d for d in FUNDAMENTAL if 1 < abs(d) <= 24]:
        chi = QuadraticCharacter(d)
        for r in (1, 2, 3):
            assert functional_equation_residual(chi, float(r)) < 1e-6, (d, r)


def test_functional_equation_rejects_bad_input():
    with pytest.raises(ValueError):
        functional_equation_residual(QuadraticCharacter(1), 2.0)
    with pytest.raises(ValueError):
        functional_equation_residual(QuadraticCharacter(-4), 2.5)
