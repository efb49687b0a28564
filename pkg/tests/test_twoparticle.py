import math

import numpy as np
import pytest

from taudirac.minkowski import OnShellMomentum, dot
from taudirac.spinor_basis import PlaneWave
from taudirac.twoparticle import (
    ANTISYMMETRIC,
    SYMMETRIC,
    build_entangled,
    cross_terms,
    current_report,
    lattice,
    parts_current,
    relative_periods,
    separable,
    swap_slots,
    total_current,
    two_particle_residual,
)

X = np.array([0.3, -0.2, 0.1, 0.5])
Y = np.array([-0.4, 0.6, 0.2, -0.1])


@pytest.fixture
def waves(gammas):
    psi = PlaneWave(OnShellMomentum.from_mass(1.0, (0.1, 0.0, 0.6)), 1, 1, 1.0, gammas=gammas)
    xi = PlaneWave(OnShellMomentum.from_mass(1.0, (-0.2, 0.3, -0.5)), 1, 1, 1.0, gammas=gammas)
    return psi, xi


def test_product_state_values(waves, gammas):
    psi, xi = waves
    state = separable(psi, xi, gammas)
    assert np.allclose(state(X, Y, 0.2), np.kron(psi(X, 0.2), xi(Y, 0.2)))


@pytest.mark.parametrize('sign', [-1, 1])
def test_exchange_symmetry(waves, gammas, sign):
    state = build_entangled(*waves, sign, gammas)
    assert np.allclose(swap_slots(state(X, Y, 0.3)), sign * state(Y, X, 0.3), atol=1e-14)


def test_entangled_tags(waves, gammas):
    assert build_entangled(*waves, -1, gammas).tag == ANTISYMMETRIC
    assert build_entangled(*waves, 1, gammas).tag == SYMMETRIC
    with pytest.raises(ValueError):
        build_entangled(*waves, 0, gammas)


def test_antisymmetric_state_of_one_field_vanishes(waves, gammas):
    psi, _ = waves
    assert np.allclose(build_entangled(psi, psi, -1, gammas)(X, Y, 0.0), 0.0)


@pytest.mark.parametrize('sign', [None, -1, 1])
def test_free_states_solve_two_particle_equation(waves, gammas, sign):
    state = separable(*waves, gammas) if sign is None else build_entangled(*waves, sign, gammas)
    residual = two_particle_residual(state, None, (X, Y, 0.4))
    assert np.abs(residual).max() < 1e-6


def test_off_shell_factor_breaks_equation(waves, gammas):
    psi, xi = waves

    def detuned(x, tau):
        return psi(x, 2 * tau)

    residual = two_particle_residual(separable(detuned, xi, gammas), None, (X, Y, 0.4))
    assert np.abs(residual).max() > 1e-2


def test_constant_potential_gauge_solution(waves, gammas):
    psi, xi = waves
    potential = np.array([0.3, -0.1, 0.2, 0.05])
    charges = (-1.0, 0.5)

    def gauged(wave, charge):
        def field(x, tau):
            return np.exp(1j * charge * dot(potential, x)) * wave(x, tau)

        return field

    state = separable(gauged(psi, charges[0]), gauged(xi, charges[1]), gammas)
    residual = two_particle_residual(state, lambda x: potential, (X, Y, 0.1), charges)
    free = two_particle_residual(state, None, (X, Y, 0.1), charges)

    assert np.abs(residual).max() < 1e-6
    assert np.abs(free).max() > 1e-2


def test_separable_currents_are_additive(waves, gammas):
    state = separable(*waves, gammas)
    for tau in (0.0, 0.7):
        assert np.allclose(total_current(state, X, Y, tau), parts_current(state, X, Y, tau), atol=1e-12)
    assert np.allclose(cross_terms(state, X, Y, 0.0), 0.0)
    assert current_report(state, Y).norm < 1e-12


@pytest.mark.parametrize('sign', [-1, 1])
def test_interference_is_cross_terms(waves, gammas, sign):
    state = build_entangled(*waves, sign, gammas)
    report = current_report(state, Y, 0.3)
    expected = np.array([cross_terms(state, x, Y, 0.3) for x in report.events])

    assert np.allclose(report.interference, expected, atol=1e-12)
    assert report.norm > 1e-3


def test_antisymmetric_and_symmetric_interference_are_opposite(waves, gammas):
    minus = current_report(build_entangled(*waves, -1, gammas), Y)
    plus = current_report(build_entangled(*waves, 1, gammas), Y)

    assert np.allclose(minus.interference, -plus.interference, atol=1e-12)
    assert minus.norm == pytest.approx(plus.norm, rel=1e-12)
    assert np.allclose(minus.parts, plus.parts)


def test_norm_is_independent_of_partner(waves, gammas):
    state = build_entangled(*waves, -1, gammas)
    base = current_report(state).norm
    for partner in ([0.5, 0.0, 0.0, 0.0], [-1.0, 2.0, 0.3, 0.7], [10.0, 0.0, -4.0, 3.0]):
        assert current_report(state, partner).norm == pytest.approx(base, rel=1e-9)


def test_relative_periods(waves):
    psi, xi = waves
    periods = relative_periods(separable(psi, xi))
    delta = np.abs(psi.wavevector - xi.wavevector)

    assert periods == pytest.approx(2 * math.pi / delta)
    assert np.array_equal(relative_periods(separable(psi, psi)), np.full(4, 2 * math.pi))
    assert np.array_equal(relative_periods(separable(lambda x, t: psi(x, t), psi)), np.full(4, 2 * math.pi))


def test_lattice_shape():
    events = lattice([1.0, 2.0, 3.0, 4.0], points=3, origin=[1.0, 0, 0, 0])

    assert events.shape == (81, 4)
    assert events[0] == pytest.approx([1.0, 0, 0, 0])
    assert events[-1] == pytest.approx([1 + 2 / 3, 4 / 3, 2.0, 8 / 3])


def test_report_dict(waves, gammas):
    report = current_report(build_entangled(*waves, 1, gammas), points=2)
    summary = report.as_dict()

    assert summary['points'] == 16
    assert summary['partner'] == [0.0, 0.0, 0.0, 0.0]
    assert summary['max_interference'] == pytest.approx(float(np.abs(report.interference).max()))
    assert 'events' not in summary
    assert len(report.as_dict(grids=True)['events']) == 16
    assert report.timelike.shape == (16,)
