import math

import numpy as np
import pytest

from taudirac import oracles

M, ALPHA = 0.511, 1 / 137.035999
E = math.sqrt(4 * math.pi * ALPHA)


def gauss(func, order=200):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return 2 * math.pi * float(weights @ np.array([func(c) for c in nodes]))


def test_thomson_limit_of_klein_nishina():
    assert oracles.klein_nishina(1e-9 * M, 0.0, M, ALPHA) == pytest.approx(
        oracles.classical_radius(M, ALPHA) ** 2 / 2, rel=1e-8
    )
    assert oracles.klein_nishina_total(1e-9 * M, M, ALPHA) == pytest.approx(oracles.thomson(M, ALPHA), rel=1e-8)


def test_klein_nishina_total_branches_agree():
    x = 1e-4
    series = oracles.thomson(M, ALPHA) * (1 - 2 * x + 26 * x**2 / 5)
    assert oracles.klein_nishina_total(x * M * 1.0000001, M, ALPHA) == pytest.approx(series, rel=1e-7)


@pytest.mark.parametrize('x', [0.01, 1.0, 10.0])
def test_klein_nishina_total_is_integral(x):
    omega = x * M
    integral = gauss(lambda c: float(oracles.klein_nishina(omega, c, M, ALPHA)))
    assert integral == pytest.approx(oracles.klein_nishina_total(omega, M, ALPHA), rel=1e-10)


def test_compton_energy():
    assert oracles.compton_energy(M, 1.0, M) == pytest.approx(M)
    assert oracles.compton_energy(M, -1.0, M) == pytest.approx(M / 3)


def test_muon_pair_total_is_integral():
    s, m_mu = 1000.0**2, 105.658
    integral = gauss(lambda c: float(oracles.muon_pair_differential(s, c, M, m_mu, ALPHA)), 16)
    assert integral == pytest.approx(oracles.muon_pair_total(s, M, m_mu, ALPHA), rel=1e-12)


def test_muon_pair_massless_electron_limit():
    s, m_mu = 1000.0**2, 105.658
    assert oracles.muon_pair_total(s, 1e-3, m_mu, ALPHA) == pytest.approx(
        oracles.muon_pair_massless_electron(s, m_mu, ALPHA), rel=1e-8
    )


def test_muon_pair_high_energy_limit():
    s = 1e8
    assert oracles.muon_pair_total(s, 1e-3, 1e-3, ALPHA) == pytest.approx(4 * math.pi * ALPHA**2 / (3 * s), rel=1e-6)


def test_annihilation_total_from_traces():
    sqrt_s = 3.0
    energy = sqrt_s / 2
    momentum = math.sqrt(energy**2 - M**2)
    flux = math.sqrt((energy**2 + momentum**2) ** 2 - M**4)

    def differential(c):
        pk1 = energy * energy - momentum * energy * c
        pk2 = energy * energy + momentum * energy * c
        square = oracles.annihilation_trace(pk1, pk2, M, E)
        return oracles.standard_differential(square, flux, energy, sqrt_s, energy, 0.0)

    assert gauss(differential) / 2 == pytest.approx(oracles.annihilation_total(sqrt_s**2, M, ALPHA), rel=1e-10)


def test_muon_pair_trace_matches_differential():
    s, m_mu = 500.0**2, 105.658
    energy = math.sqrt(s) / 2
    p, k = math.sqrt(energy**2 - M**2), math.sqrt(energy**2 - m_mu**2)
    c = 0.4
    sin = math.sqrt(1 - c * c)
    p1, p2 = np.array([energy, 0, 0, p]), np.array([energy, 0, 0, -p])
    p3, p4 = np.array([energy, k * sin, 0, k * c]), np.array([energy, -k * sin, 0, -k * c])
    square = oracles.muon_pair_trace(p1, p2, p3, p4, M, m_mu, E)
    flux = math.sqrt((energy**2 + p**2) ** 2 - M**4)
    value = oracles.standard_differential(square, flux, k, 2 * energy, energy, 0.0)
    assert value == pytest.approx(float(oracles.muon_pair_differential(s, c, M, m_mu, ALPHA)), rel=1e-10)
