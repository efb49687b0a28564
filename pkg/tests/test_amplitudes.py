import math

import numpy as np
import pytest

from taudirac import oracles
from taudirac.amplitudes import (
    DEFAULT_COUPLING,
    MUON_PAIR_DIAGRAM,
    FourierMode,
    PhotonLeg,
    ProcessSpec,
    annihilation_square,
    antiparticle_projector,
    boson_potential,
    compton_amplitude,
    compton_square,
    expand_diagram,
    first_order_amplitude,
    moller_current,
    muon_pair_amplitude,
    muon_pair_square,
    pair_annihilation_amplitude,
    particle_projector,
    summed_square,
    tau_window_overlap,
    transition_frequency,
    virtual_vertex_expand,
)
from taudirac.clifford import DIRAC, WEYL
from taudirac.cross_sections import direction, solve_two_body
from taudirac.exceptions import (
    NormalizationMismatchError,
    OffLightConeError,
    PotentialDecompositionError,
    ProcessSpecError,
)
from taudirac.minkowski import OnShellMomentum, dot, sample_momenta
from taudirac.propagators import transverse_polarizations
from taudirac.spinor_basis import PlaneWave, antiparticle_wave, build_basis

M_E, M_MU = 0.511, 105.658
X = np.array([0.2, 0.1, -0.3, 0.4])


def mdot(a, b):
    return -dot(a, b)


@pytest.fixture
def muon_kinematics():
    momentum = math.sqrt(250.0**2 - M_E**2)
    p1 = OnShellMomentum.from_mass(M_E, (0, 0, momentum))
    p2 = OnShellMomentum.from_mass(M_E, (0, 0, -momentum))
    kin = solve_two_body(p1.p, p2.p, M_MU, M_MU, 0.3)
    return p1, p2, OnShellMomentum.from_mass(M_MU, kin.p3[1:]), OnShellMomentum.from_mass(M_MU, kin.p4[1:])


def test_projectors_match_spin_sums(momenta, gammas):
    for p in momenta:
        if p.phi < 0:
            continue
        block = build_basis(p.p, gammas)
        np.testing.assert_allclose(block.u @ block.u_bar, particle_projector(p.p, p.m, gammas), atol=1e-9 * p.energy)
        np.testing.assert_allclose(block.v @ block.v_bar, antiparticle_projector(p.p, p.m, gammas), atol=1e-9 * p.energy)


def test_moller_current_is_conserved(gammas):
    for p1, p2 in zip(*(sample_momenta(np.random.default_rng(seed), 10, (1.0, 1.0), signs=False) for seed in (1, 2))):
        for s1 in (1, 2):
            for s2 in (1, 2):
                electron = PlaneWave(p1, 1, s1, gammas=gammas)
                positron = antiparticle_wave(p2, s2, gammas=gammas)
                current = moller_current(positron, electron)
                assert abs(current.divergence()) < 1e-10 * p1.energy * p2.energy
                assert current.factor.satisfied


def test_moller_current_validation():
    p = OnShellMomentum.from_mass(1.0, (0, 0, 0.2))
    electron = PlaneWave(p)
    with pytest.raises(ProcessSpecError):
        moller_current(electron, electron)
    with pytest.raises(NormalizationMismatchError):
        moller_current(antiparticle_wave(p, normalization=1.0), electron)


def test_moller_current_phase():
    p1 = OnShellMomentum.from_mass(1.0, (0, 0, 0.2))
    p2 = OnShellMomentum.from_mass(1.0, (0.1, 0, 0))
    current = moller_current(antiparticle_wave(p2), PlaneWave(p1))
    np.testing.assert_allclose(current.wavevector, p1.p + p2.p)
    np.testing.assert_allclose(current(X), current(np.zeros(4)) * np.exp(1j * dot(p1.p + p2.p, X)))


def test_first_order_amplitude_without_potential():
    p = OnShellMomentum.from_mass(1.0, (0, 0, 0.2))
    spec = ProcessSpec((PlaneWave(p),), (PlaneWave(p),))
    assert first_order_amplitude(spec, None).reduced == 0
    with pytest.raises(PotentialDecompositionError):
        first_order_amplitude(spec, lambda x: np.zeros(4))
    with pytest.raises(ProcessSpecError):
        first_order_amplitude(ProcessSpec((PlaneWave(p), PlaneWave(p)), (PlaneWave(p),)), None)


def test_first_order_conservation_factors():
    p_in = OnShellMomentum.from_mass(1.0, (0, 0, 0.2))
    p_out = OnShellMomentum.from_mass(1.0, (0, 0.3, 0.2))
    mode = FourierMode(np.array([0, 1.0, 0, 0], dtype=np.complex128), p_out.p - p_in.p)
    result = first_order_amplitude(ProcessSpec((PlaneWave(p_in),), (PlaneWave(p_out),)), mode)
    assert result.count('momentum') == 1 and result.count('mass') == 1
    assert all(f.satisfied for f in result.factors)


def test_unmatched_masses_vanish_over_long_windows():
    f_in = PlaneWave(OnShellMomentum.from_mass(1.0, (0, 0, 0)))
    f_out = PlaneWave(OnShellMomentum.from_mass(2.0, (0, 0, 0)))
    omega = transition_frequency(f_in, f_out)
    assert omega == pytest.approx(-1.0)
    mode = FourierMode(np.array([1.0, 0, 0, 0], dtype=np.complex128), f_out.wavevector - f_in.wavevector)
    result = first_order_amplitude(ProcessSpec((f_in,), (f_out,)), mode)
    assert not all(f.satisfied for f in result.factors)
    assert tau_window_overlap(0.0, 1e6) == 1.0
    assert abs(tau_window_overlap(omega, 1e6)) < 1e-5
    assert abs(tau_window_overlap(omega, 1e3)) > abs(tau_window_overlap(omega, 1e6))


def test_muon_pair_spin_sum_matches_traces(muon_kinematics, gammas):
    p1, p2, p3, p4 = muon_kinematics
    amplitudes = [
        muon_pair_amplitude(p1, p2, p3, p4, tuple(s + 1 for s in spins), gammas=gammas)
        for spins in np.ndindex(2, 2, 2, 2)
    ]
    traces = muon_pair_square(p1.p, p2.p, p3.p, p4.p, M_E, M_MU, DEFAULT_COUPLING, gammas)
    assert summed_square(amplitudes) == pytest.approx(traces, rel=1e-10)
    for a in amplitudes:
        assert a.count('momentum') == 1 and a.count('mass') == 2
        assert all(f.satisfied for f in a.factors)


def test_muon_pair_source_choice_agrees(muon_kinematics):
    p1, p2, p3, p4 = muon_kinematics
    for spins in ((1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 2)):
        electron = muon_pair_amplitude(p1, p2, p3, p4, spins)
        muon = muon_pair_amplitude(p1, p2, p3, p4, spins, source='muon')
        assert abs(muon.reduced) == pytest.approx(abs(electron.reduced), rel=1e-10)


def test_muon_pair_traces_match_oracle(muon_kinematics):
    p1, p2, p3, p4 = muon_kinematics
    e = DEFAULT_COUPLING
    scale = (2 * M_E) ** 2 * (2 * M_MU) ** 2 / 4
    oracle = oracles.muon_pair_trace(p1.p, p2.p, p3.p, p4.p, M_E, M_MU, e)
    for gammas in (DIRAC, WEYL):
        square = muon_pair_square(p1.p, p2.p, p3.p, p4.p, M_E, M_MU, e, gammas)
        assert square * scale == pytest.approx(oracle, rel=1e-10)


def compton_momenta(omega, cos_theta, m=M_E):
    p = np.array([m, 0.0, 0.0, 0.0])
    k = np.array([omega, 0.0, 0.0, omega])
    omega_out = float(oracles.compton_energy(omega, cos_theta, m))
    k_out = np.concatenate(([omega_out], omega_out * direction(cos_theta)))
    return p, k, p + k - k_out, k_out


@pytest.mark.parametrize('omega', [0.01, 0.511, 5.0])
@pytest.mark.parametrize('cos_theta', [-0.9, 0.0, 0.7])
def test_compton_traces_match_oracle(omega, cos_theta, gammas):
    p, k, p_out, k_out = compton_momenta(omega, cos_theta)
    e = DEFAULT_COUPLING
    square = compton_square(p, k, p_out, k_out, M_E, e, gammas)
    oracle = oracles.compton_trace(mdot(p, k), mdot(p, k_out), M_E, e)
    assert square * (2 * M_E) ** 2 / 4 == pytest.approx(oracle, rel=1e-9)


@pytest.mark.parametrize('cos_theta', [-0.5, 0.1, 0.8])
def test_annihilation_traces_match_oracle(cos_theta, gammas):
    energy = 2.0
    momentum = math.sqrt(energy**2 - M_E**2)
    p1 = np.array([energy, 0, 0, momentum])
    p2 = np.array([energy, 0, 0, -momentum])
    k1 = np.concatenate(([energy], energy * direction(cos_theta)))
    k2 = np.concatenate(([energy], -energy * direction(cos_theta)))
    e = DEFAULT_COUPLING
    square = annihilation_square(p1, p2, k1, k2, M_E, e, gammas)
    oracle = oracles.annihilation_trace(mdot(p1, k1), mdot(p1, k2), M_E, e)
    assert square * (2 * M_E) ** 2 / 4 == pytest.approx(oracle, rel=1e-9)


@pytest.mark.parametrize('gap', [1e-3, 1e-4, 1e-5])
def test_annihilation_forward_pole(gap, gammas):
    # photon along the electron: Σ|M|² grows as 1/(2p₁·k₁)
    energy = 1000 * M_E
    momentum = math.sqrt(energy**2 - M_E**2)
    p1 = np.array([energy, 0, 0, momentum])
    p2 = np.array([energy, 0, 0, -momentum])
    k1 = np.concatenate(([energy], energy * direction(1 - gap)))
    k2 = np.concatenate(([energy], -energy * direction(1 - gap)))
    e = DEFAULT_COUPLING
    square = annihilation_square(p1, p2, k1, k2, M_E, e, gammas) * (2 * M_E) ** 2 / 4

    assert square * 2 * mdot(p1, k1) / mdot(p1, k2) == pytest.approx(4 * e**4, rel=1e-4)


def test_compton_spin_sum_matches_traces(gammas):
    p, k, p_out, k_out = compton_momenta(0.8, 0.3)
    electron = OnShellMomentum.of(p)
    scattered = OnShellMomentum.from_mass(M_E, p_out[1:])
    amplitudes = []
    for s_in in (1, 2):
        for s_out in (1, 2):
            for eps in transverse_polarizations(k):
                for eps_out in transverse_polarizations(k_out):
                    spec = ProcessSpec(
                        (PlaneWave(electron, 1, s_in, gammas=gammas),),
                        (PlaneWave(scattered, 1, s_out, gammas=gammas),),
                        (PhotonLeg(eps, k, True), PhotonLeg(eps_out, k_out, False)),
                    )
                    result = compton_amplitude(spec)
                    assert all(f.satisfied for f in result.factors)
                    amplitudes.append(result)
    assert summed_square(amplitudes) == pytest.approx(compton_square(p, k, p_out, k_out, M_E, gammas=gammas), rel=1e-10)


def test_second_order_has_one_mass_factor_per_line():
    p, k, p_out, k_out = compton_momenta(0.8, 0.3)
    legs = (
        PhotonLeg(transverse_polarizations(k)[0], k, True),
        PhotonLeg(transverse_polarizations(k_out)[1], k_out, False),
    )
    spec = ProcessSpec(
        (PlaneWave(OnShellMomentum.of(p)),),
        (PlaneWave(OnShellMomentum.from_mass(M_E, p_out[1:])),),
        legs,
    )
    result = compton_amplitude(spec)

    assert [(f.kind, f.label) for f in result.factors] == [
        ('momentum', 'total'), ('mass', 'fermion line'), ('mass', 'photon line')
    ]
    assert [leg.frequency for leg in legs] == [0.0, 0.0]
    assert result.factors[2].mismatch == 0.0

    heavier = OnShellMomentum.from_mass(2 * M_E, p_out[1:])
    detuned = compton_amplitude(ProcessSpec(spec.incident, (PlaneWave(heavier),), legs))
    assert not detuned.factors[1].satisfied


def test_crossed_term_is_optional():
    p, k, p_out, k_out = compton_momenta(0.8, 0.3)
    eps, eps_out = transverse_polarizations(k)[0], transverse_polarizations(k_out)[0]
    spec = ProcessSpec(
        (PlaneWave(OnShellMomentum.of(p)),),
        (PlaneWave(OnShellMomentum.from_mass(M_E, p_out[1:])),),
        (PhotonLeg(eps, k, True), PhotonLeg(eps_out, k_out, False)),
    )
    assert compton_amplitude(spec, crossed=False).reduced != compton_amplitude(spec).reduced


def test_process_validation():
    p = OnShellMomentum.from_mass(1.0, (0, 0, 0.3))
    k = np.array([1.0, 0, 0, 1.0])
    leg = PhotonLeg(np.array([0, 1.0, 0, 0]), k)
    with pytest.raises(OffLightConeError):
        PhotonLeg(np.array([0, 1.0, 0, 0]), np.array([1.0, 0, 0, 0.5]))
    with pytest.raises(OffLightConeError):
        PhotonLeg(np.array([0, 0, 0, 1.0]), np.array([1.0, 0, 0, 1.0]))
    forward = ProcessSpec((PlaneWave(p),), (PlaneWave(p),), (leg, leg))
    with pytest.raises(ProcessSpecError):
        pair_annihilation_amplitude(forward)
    backward = ProcessSpec((PlaneWave(p),), (antiparticle_wave(p),), (leg, leg))
    with pytest.raises(ProcessSpecError):
        compton_amplitude(backward)
    with pytest.raises(ProcessSpecError):
        compton_amplitude(ProcessSpec((PlaneWave(p),), (PlaneWave(p),), (leg,)))


def test_boson_potential_of_current():
    p1 = OnShellMomentum.from_mass(1.0, (0, 0, 0.5))
    p2 = OnShellMomentum.from_mass(1.0, (0, 0, -0.5))
    current = moller_current(antiparticle_wave(p2), PlaneWave(p1))
    mode = boson_potential(current)
    np.testing.assert_allclose(mode.wavevector, p1.p + p2.p)
    assert mode.factors == (current.factor,)
    assert mode.normalizations == current.normalizations


@pytest.mark.parametrize('antiparticle', [False, True])
def test_virtual_vertex_expansion_reproduces_wave(antiparticle, gammas):
    p = OnShellMomentum.from_mass(1.0, (0.3, -0.1, 0.2))
    wave = antiparticle_wave(p, gammas=gammas) if antiparticle else PlaneWave(p, gammas=gammas)
    expansion = virtual_vertex_expand(wave, 0.5)
    for tau in (0.1, 0.9):
        np.testing.assert_allclose(expansion(X, tau), wave(X, tau), atol=1e-10)


def test_diagram_expansion_counts():
    expanded = expand_diagram(MUON_PAIR_DIAGRAM, 2)
    assert expanded.vertices == 4
    assert expanded.fermion_legs == 6
    assert expand_diagram(MUON_PAIR_DIAGRAM, 0) == MUON_PAIR_DIAGRAM
    with pytest.raises(ProcessSpecError):
        expand_diagram(MUON_PAIR_DIAGRAM, 5)


@pytest.mark.parametrize('gauged', [0, 1])
def test_annihilation_ward_identity(rng, gammas, gauged):
    for _ in range(100):
        sqrt_s = rng.uniform(1.1, 20.0)
        momentum = math.sqrt(sqrt_s**2 / 4 - M_E**2)
        p1 = OnShellMomentum.from_mass(M_E, (0, 0, momentum))
        p2 = OnShellMomentum.from_mass(M_E, (0, 0, -momentum))
        kin = solve_two_body(p1.p, p2.p, 0.0, 0.0, rng.uniform(-1, 1))
        spins = rng.integers(1, 3, size=2)
        electron = PlaneWave(p1, 1, int(spins[0]), gammas=gammas)
        positron = antiparticle_wave(p2, int(spins[1]), gammas=gammas)

        photons = [kin.p3, kin.p4]
        physical = [transverse_polarizations(k)[0] for k in photons]
        legs = [PhotonLeg(eps, k, False) for eps, k in zip(physical, photons)]
        reference = abs(pair_annihilation_amplitude(ProcessSpec((electron,), (positron,), tuple(legs)), crossed=True).reduced)

        legs[gauged] = PhotonLeg(photons[gauged].astype(complex), photons[gauged], False)
        ward = pair_annihilation_amplitude(ProcessSpec((electron,), (positron,), tuple(legs)), crossed=True)
        assert abs(ward.reduced) <= 1e-10 * max(1.0, reference * photons[gauged][0])


def test_annihilation_ward_identity_on_both_legs(rng, gammas):
    for _ in range(100):
        sqrt_s = rng.uniform(1.1, 20.0)
        momentum = math.sqrt(sqrt_s**2 / 4 - M_E**2)
        p1 = OnShellMomentum.from_mass(M_E, (0, 0, momentum))
        p2 = OnShellMomentum.from_mass(M_E, (0, 0, -momentum))
        kin = solve_two_body(p1.p, p2.p, 0.0, 0.0, rng.uniform(-1, 1))
        spins = rng.integers(1, 3, size=2)
        electron = PlaneWave(p1, 1, int(spins[0]), gammas=gammas)
        positron = antiparticle_wave(p2, int(spins[1]), gammas=gammas)

        photons = [kin.p3, kin.p4]
        legs = tuple(PhotonLeg(k.astype(complex), k, False) for k in photons)
        ward = pair_annihilation_amplitude(ProcessSpec((electron,), (positron,), legs), crossed=True)
        assert abs(ward.reduced) <= 1e-10 * max(1.0, sqrt_s**2)
