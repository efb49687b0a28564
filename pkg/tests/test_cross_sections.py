import math
from dataclasses import replace

import numpy as np
import pytest

from taudirac import oracles
from taudirac.amplitudes import ConservationFactor
from taudirac.clifford import DIRAC, WEYL
from taudirac.config import RunConfig
from taudirac.cross_sections import (
    PROCESSES,
    RegScalar,
    SquaredAmplitude,
    cross_section,
    differential,
    incident_flux,
    rate_steps,
    solve_two_body,
    two_body_factor,
)
from taudirac.exceptions import (
    DegenerateFluxError,
    MissingConservationFactorError,
    NormalizationMismatchError,
    RegularizationError,
    ThresholdError,
    UnknownProcessError,
)
from taudirac.minkowski import OnShellMomentum

FACTORS = (
    ConservationFactor('momentum', 'total', 0.0),
    ConservationFactor('mass', 'line 1', 0.0),
)


@pytest.fixture
def small():
    return RunConfig(grid_points=7, quadrature_order=24)


def above_threshold(config, process):
    return replace(config, sqrt_s=1000.0 if process == 'mu-pair' else 3.0)


def test_regscalar_arithmetic():
    a = RegScalar(2.0, 4, 1)
    b = RegScalar(4.0, -4, 0)

    assert a * b == RegScalar(8.0, 0, 1)
    assert a / b == RegScalar(0.5, 8, 1)
    assert 3 * a == RegScalar(6.0, 4, 1)
    assert (a + a).value == 4.0
    assert not a.physical
    assert RegScalar(1.0).physical


def test_regscalar_refuses_mixed_powers():
    with pytest.raises(RegularizationError):
        RegScalar(1.0, 4, 0) + RegScalar(1.0, 0, 0)


def test_rate_steps_cancel_volume():
    L = 3.0
    ledger = rate_steps(SquaredAmplitude(2.0, (1 / L**2,) * 4, FACTORS), L)

    assert ledger.result.power_dtau == 0
    assert ledger.result.power_L == -16
    assert ledger.result.value == pytest.approx(2.0 * L**-16)
    assert len(ledger.steps) == 4


def test_rate_steps_need_conservation_factors():
    with pytest.raises(MissingConservationFactorError):
        rate_steps(SquaredAmplitude(1.0, (1.0,) * 4, FACTORS[:1]), 1.0)
    with pytest.raises(MissingConservationFactorError):
        rate_steps(SquaredAmplitude(1.0, (1.0,) * 4, FACTORS[1:]), 1.0)


def test_rate_steps_need_box_normalization():
    with pytest.raises(NormalizationMismatchError):
        rate_steps(SquaredAmplitude(1.0, (1 / (2 * math.pi) ** 2,) * 4, FACTORS), 1.0)


def test_unsatisfied_factor_gives_zero_rate():
    factors = (ConservationFactor('momentum', 'total', 1.0), FACTORS[1])
    assert rate_steps(SquaredAmplitude(5.0, (1.0,) * 4, factors), 1.0).result.value == 0.0


def test_incident_flux():
    p1 = OnShellMomentum.from_mass(0.511, (0, 0, 0))
    photon = np.array([1.0, 0, 0, 1.0])
    flux = incident_flux(p1, photon, 2.0)

    assert flux.power_L == -4
    assert flux.value == pytest.approx(0.511 / (0.511 * 0.5 * 16))


def test_incident_flux_degenerate():
    photon = np.array([1.0, 0, 0, 1.0])
    with pytest.raises(DegenerateFluxError):
        incident_flux(photon, photon, 1.0)


def test_two_body_solution_conserves_momentum():
    p1 = OnShellMomentum.from_mass(0.511, (0, 0, 0)).p
    p2 = np.array([2.0, 0, 0, 2.0])
    kin = solve_two_body(p1, p2, 0.0, 0.511, 0.2)

    assert kin.p3[0] == pytest.approx(float(oracles.compton_energy(2.0, 0.2, 0.511)), rel=1e-12)
    assert np.allclose(kin.p1 + kin.p2, kin.p3 + kin.p4, atol=1e-12)
    assert kin.p4[0] ** 2 - kin.p4[1:] @ kin.p4[1:] == pytest.approx(0.511**2, rel=1e-9)
    assert two_body_factor(kin) > 0


def test_two_body_threshold():
    with pytest.raises(ThresholdError):
        solve_two_body(np.array([1.0, 0, 0, 0]), np.array([1.0, 0, 0, 0]), 1.5, 1.5, 0.0)


@pytest.mark.parametrize('process', list(PROCESSES))
def test_regularization_powers_cancel(process, small):
    config = above_threshold(small, process)
    result, steps, _ = differential(PROCESSES[process], config, 0.3)

    assert result.physical
    assert (steps[-1].running.power_L, steps[-1].running.power_dtau) == (0, 0)


@pytest.mark.parametrize('process', list(PROCESSES))
def test_box_edge_drops_out(process, small):
    values = [
        differential(PROCESSES[process], replace(above_threshold(small, process), box_edge=L), -0.4)[0].value
        for L in (1.0, 10.0, 100.0)
    ]

    assert values[1] == pytest.approx(values[0], rel=1e-12)
    assert values[2] == pytest.approx(values[0], rel=1e-12)


@pytest.mark.parametrize('process', list(PROCESSES))
def test_recipe_matches_standard_formula(process, small):
    result, _, standard = differential(PROCESSES[process], above_threshold(small, process), 0.7)
    assert result.value == pytest.approx(standard, rel=1e-10)


@pytest.mark.parametrize('process', list(PROCESSES))
def test_trace_audit_follows_spin_amplitudes(process, small):
    config = above_threshold(small, process)
    _, traced, _ = differential(PROCESSES[process], config, 0.3)
    _, spun, _ = differential(PROCESSES[process], config, 0.3, method='spins')

    assert [(s.label, s.factor.power_L, s.factor.power_dtau) for s in traced] == [
        (s.label, s.factor.power_L, s.factor.power_dtau) for s in spun
    ]


@pytest.mark.parametrize('process', list(PROCESSES))
def test_trace_rate_uses_amplitude_deltas(process, small):
    model = PROCESSES[process]

    def mismatched(kin, config, gammas, L):
        for a in model.amplitudes(kin, config, gammas, L):
            yield replace(a, factors=(ConservationFactor('momentum', 'total', 1.0), *a.factors[1:]))

    result, _, standard = differential(replace(model, amplitudes=mismatched), above_threshold(small, process), 0.3)
    assert result.value == 0.0
    assert standard > 0


@pytest.mark.parametrize('sqrt_s', [250.0, 500.0, 1000.0, 10000.0])
def test_muon_pair_matches_oracle(sqrt_s):
    config = RunConfig(sqrt_s=sqrt_s)
    result = cross_section('mu-pair', config)

    assert result.metadata['differential_max_relative_delta'] < 1e-10
    assert result.metadata['sigma_relative_delta'] < 1e-10
    assert result.dsigma_domega == pytest.approx(
        oracles.muon_pair_differential(sqrt_s**2, result.cos_theta, config.m_e, config.m_mu, config.alpha),
        rel=1e-10,
    )


def test_muon_pair_isotropic_at_threshold(small):
    config = replace(small, sqrt_s=2 * small.m_mu * (1 + 1e-4))
    near = cross_section('mu-pair', config)
    far = cross_section('mu-pair', replace(config, sqrt_s=1000.0))

    assert near.dsigma_domega.max() / near.dsigma_domega.min() - 1 < 1e-3
    assert far.dsigma_domega.max() / far.dsigma_domega.min() - 1 > 0.5
    assert near.dsigma_domega == pytest.approx(
        oracles.muon_pair_differential(config.sqrt_s**2, near.cos_theta, config.m_e, config.m_mu, config.alpha),
        rel=1e-8,
    )


def test_muon_pair_light_electron_limit(small):
    config = replace(small, m_e=1e-3)
    result = cross_section('mu-pair', config)
    massless = oracles.muon_pair_massless_electron(config.sqrt_s**2, config.m_mu, config.alpha)

    assert result.sigma == pytest.approx(massless, rel=1e-6)


@pytest.mark.parametrize('ratio', [0.01, 0.1, 1.0, 10.0])
def test_compton_matches_klein_nishina(ratio):
    config = RunConfig(grid_points=9, quadrature_order=128, omega=ratio * 0.511)
    result = cross_section('compton', config)

    assert result.metadata['differential_max_relative_delta'] < 1e-9
    assert result.sigma == pytest.approx(oracles.klein_nishina_total(config.omega, config.m_e, config.alpha), rel=1e-9)


def test_compton_thomson_limit():
    config = RunConfig(grid_points=5, quadrature_order=16, omega=1e-7 * 0.511)
    result = cross_section('compton', config)

    assert result.sigma == pytest.approx(oracles.thomson(config.m_e, config.alpha), rel=1e-6)


def test_annihilation_matches_dirac_total():
    config = RunConfig(grid_points=9, quadrature_order=128, sqrt_s=3.0)
    result = cross_section('annihilation', config)

    assert 'differential_max_relative_delta' not in result.metadata
    assert result.metadata['sigma_relative_delta'] < 1e-8


@pytest.mark.parametrize('process', ['mu-pair', 'compton', 'annihilation'])
def test_spin_sums_match_traces(process):
    config = RunConfig(grid_points=3, quadrature_order=4, sqrt_s=3.0 if process == 'annihilation' else 1000.0)
    traces = cross_section(process, config)
    spins = cross_section(process, config, method='spins')

    assert spins.dsigma_domega == pytest.approx(traces.dsigma_domega, rel=1e-9)
    assert spins.metadata['method'] == 'spins'


@pytest.mark.parametrize('process', ['mu-pair', 'compton'])
def test_representation_independent(small, process):
    dirac = cross_section(process, small, gammas=DIRAC)
    weyl = cross_section(process, small, gammas=WEYL)

    assert weyl.dsigma_domega == pytest.approx(dirac.dsigma_domega, rel=1e-10)
    assert weyl.sigma == pytest.approx(dirac.sigma, rel=1e-10)
    assert weyl.metadata['representation'] != dirac.metadata['representation']


def test_below_threshold(small):
    with pytest.raises(ThresholdError):
        cross_section('mu-pair', replace(small, sqrt_s=200.0))


def test_unknown_process(small):
    with pytest.raises(UnknownProcessError):
        cross_section('bhabha', small)


def test_workers_do_not_change_result(small):
    serial = cross_section('mu-pair', small)
    threaded = cross_section('mu-pair', replace(small, workers=True))

    assert np.array_equal(serial.dsigma_domega, threaded.dsigma_domega)
    assert serial.sigma == threaded.sigma


def test_audit_dict(small):
    audit = cross_section('compton', small).audit_dict()

    assert audit['process'] == 'compton'
    assert audit['frame'] == 'electron rest frame'
    assert audit['regularization'][-1]['power_L'] == 0
    assert audit['regularization'][-1]['power_dtau'] == 0
    assert audit['sqrt_s'] is None
