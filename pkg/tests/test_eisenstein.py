import cmath
from math import pi, sqrt

import numpy as np
import pytest

from mockform.config import EvalConfig
from mockform.class_numbers import cohen_class_number
from mockform.eisenstein import (
    Gamma04Matrix,
    IDENTITY,
    automorphy_factor,
    cocycle_sign,
    eisenstein_direct,
    eisenstein_fourier,
    j_factor,
    lattice_tail_estimate,
    modularity_residual,
    multiplier_identity_residual,
    random_words,
    sigma_shift_residual,
    theta_multiplier,
    theta_multiplier_top_row,
)
from mockform.maass import theta_series

CFG = EvalConfig()


def test_matrix_validation():
    with pytest.raises(ValueError):
        Gamma04Matrix(1, 0, 2, 1)  # c not divisible by 4
    with pytest.raises(ValueError):
        Gamma04Matrix(2, 0, 4, 1)  # det != 1
    g = Gamma04Matrix(1, 2, 4, 9)
    assert (g @ IDENTITY) == g
    assert (-g).entries() == (-1, -2, -4, -9)


def test_j_factor():
    assert j_factor(IDENTITY, 0.3 + 2j) == 1
    assert j_factor(Gamma04Matrix(1, 1, 0, 1), 1j) == 1
    val = j_factor(Gamma04Matrix(1, 0, 4, 1), 1j)
    assert abs(val - cmath.sqrt(1 + 4j)) < 1e-15
    assert val.real > 0 and val.imag > 0  # first quadrant


def test_theta_multiplier_examples():
    assert theta_multiplier(IDENTITY) == 1
    assert theta_multiplier(Gamma04Matrix(1, 0, 4, 1)) == 1
    assert theta_multiplier(Gamma04Matrix(-3, -1, 4, 1)) == 1
    # top-row expression on the valid +- representative
    g = Gamma04Matrix(-3, -1, 4, 1)
    assert multiplier_identity_residual(g) < 1e-14
    assert theta_multiplier_top_row(-g) == theta_multiplier(-g)


def test_theta_multiplier_against_theta_function():
    # v(g) is the actual multiplier of the theta function
    rng = np.random.default_rng(5)
    tau = 0.273 + 0.91j
    checked = 0
    for g in random_words(rng, 400):
        gt = g.apply(tau)
        if gt.imag < 0.05:
            continue
        lhs = theta_series(gt, CFG)
        rhs = theta_multiplier(g) * j_factor(g, tau) * theta_series(tau, CFG)
        assert abs(lhs - rhs) < 1e-9, g
        checked += 1
    assert checked > 100


def test_multiplier_identity_on_words():
    rng = np.random.default_rng(12345)
    for g in random_words(rng, 1000, require_b=True):
        assert multiplier_identity_residual(g) < 1e-14, g


def test_cocycle_sign_and_shift():
    rng = np.random.default_rng(2)
    tau = 0.3 + 0.9j
    assert cocycle_sign(IDENTITY, Gamma04Matrix(1, 0, 4, 1), tau) == 1
    checked = 0
    while checked < 100:
        g1, g2 = random_words(rng, 2)
        if g1.a < 0 and g1.c < 0:
            g1 = -g1
        if (g1 @ g2).a < 0 and (g1 @ g2).c < 0:
            continue
        assert cocycle_sign(g1, g2, tau) in (1, -1)
        assert sigma_shift_residual(g1, g2, tau) < 1e-10
        checked += 1


def test_sigma_shift_rejects_unnormalized():
    g1 = -Gamma04Matrix(1, 0, 4, 1)
    with pytest.raises(ValueError):
        sigma_shift_residual(g1, IDENTITY, 0.5j)


def test_automorphy_cocycle_universal():
    rng = np.random.default_rng(3)
    tau = 0.41 + 1.2j
    for _ in range(100):
        g1, g2 = random_words(rng, 2)
        lhs = automorphy_factor(g1 @ g2, tau)
        rhs = automorphy_factor(g1, g2.apply(tau)) * automorphy_factor(g2, tau)
        assert abs(lhs - rhs) < 1e-10


def test_direct_series_domain():
    with pytest.raises(ValueError):
        eisenstein_direct("E", 1, 0.0, 1j, CFG)  # k + 2s = 1, diverges
    with pytest.raises(ValueError):
        eisenstein_direct("X", 2, 1.0, 1j, CFG)
    with pytest.raises(ValueError):
        eisenstein_fourier(1, 0.0, 1j, CFG)


def test_f_defining_relation():
    tau = (1 + 2j) / 2
    k, s = 2, 1.0
    lhs = eisenstein_direct("F", k, s, tau, CFG)
    w = -1 / (4 * tau)
    rhs = cmath.exp(-(k + 0.5) * cmath.log(tau)) * abs(tau) ** (-2 * s) \
        * eisenstein_direct("E", k, s, w, CFG)
    assert lhs == rhs  # same code path, defining relation


def test_lattice_tail_estimate_bounds_refinement():
    tau = 0.2 + 0.9j
    for (k, s) in ((1, 1.0), (2, 1.0)):
        coarse = eisenstein_direct("E", k, s, tau, CFG.with_(lattice_bound=151))
        fine = eisenstein_direct("E", k, s, tau, CFG.with_(lattice_bound=601))
        observed = abs(coarse - fine)
        estimate = lattice_tail_estimate(k, s, tau, 151)
        assert observed < 20 * estimate
        assert estimate < 1e-2
    with pytest.raises(ValueError):
        lattice_tail_estimate(1, 0.0, tau, 100)


def test_dual_route_agreement():
    for (k, s) in ((1, 1.0), (2, 1.0)):
        for tau in (0.2 + 0.8j, 1j):
            direct = eisenstein_direct("H", k, s, tau, CFG)
            fourier = eisenstein_fourier(k, s, tau, CFG)
            assert abs(direct - fourier) / abs(direct) < 5e-3, (k, s, tau)


def test_weight_five_halves_q_expansion():
    tau = 1j
    q = cmath.exp(2j * pi * tau)
    series = sum(float(cohen_class_number(2, n)) * q ** n for n in range(31))
    fourier = eisenstein_fourier(2, 0.0, tau, CFG)
    assert abs(fourier - series) < 1e-10
    direct = eisenstein_direct("H", 2, 0.0, tau, CFG)
    assert abs(direct - series) < 1e-4


def test_principal_power_branch_conventions():
    # z^{k+1/2} = z^k sqrt(z), and the quotient of half powers collapses when
    # the arguments differ by an angle in (0, pi)
    rng = np.random.default_rng(8)
    for _ in range(200):
        z = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3.0))
        k = int(rng.integers(1, 4))
        assert abs(cmath.exp((k + 0.5) * cmath.log(z)) - z ** k * cmath.sqrt(z)) \
            < 1e-12 * abs(z) ** (k + 0.5)
        tau = complex(rng.uniform(-1, 1), rng.uniform(0.1, 2.0))
        g = random_words(rng, 1)[0]
        a, b, c, d = g.entries()
        num, den = a * tau + b, c * tau + d
        if 0 < cmath.phase(num) - cmath.phase(den) < pi:
            ratio = cmath.sqrt(num / den)
            split = cmath.sqrt(num) / cmath.sqrt(den)
            assert abs(ratio - split) < 1e-12 * abs(ratio)


def test_modularity_residuals():
    f = lambda t: eisenstein_direct("E", 2, 1.0, t, CFG)
    assert modularity_residual(f, 2, 1.0, IDENTITY, 0.2 + 0.9j) == 0
    shift = Gamma04Matrix(1, 1, 0, 1)
    # the Fourier route is 1-periodic by construction; the lattice sum only
    # up to its truncation window
    fser = lambda t: eisenstein_fourier(2, 1.0, t, CFG)
    assert modularity_residual(fser, 2, 1.0, shift, 0.2 + 0.9j) < 1e-12
    assert modularity_residual(f, 2, 1.0, shift, 0.2 + 0.9j) < 1e-8
    g = Gamma04Matrix(1, 0, 4, 1)
    assert modularity_residual(f, 2, 1.0, g, 0.1 + 0.9j) < 1e-3
    g2 = Gamma04Matrix(-3, -1, 4, 1)
    assert modularity_residual(f, 2, 1.0, g2, 0.1 + 0.9j) < 1e-3
    # F path, normalized against the large Fricke magnitudes
    ff = lambda t: eisenstein_direct("F", 2, 1.0, t, CFG)
    assert modularity_residual(ff, 2, 1.0, g, 0.1 + 0.9j, normalized=True) < 1e-3
    assert modularity_residual(ff, 2, 1.0, g2, 0.1 + 0.9j, normalized=True) < 1e-3
