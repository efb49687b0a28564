""" Copyright 2026 The taudirac Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

"""Scattering amplitudes of the parametrized formalism.

Amplitudes are reduced analytically for plane wave inputs. Space-time
and τ integrals of pure phases become conservation factors that are
recorded symbolically on the result; the reduced element is the spinor
contraction left over. Spin sums are provided both as explicit sums over
amplitudes and as numeric traces over spin projectors.
"""

import math
from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np
import numpy.typing as npt

from taudirac.clifford import GammaBasis, IDENTITY, Spinor, SpinorMatrix, dirac_adjoint, representation, slash
from taudirac.config import ALPHA
from taudirac.exceptions import (
    NormalizationMismatchError,
    OffLightConeError,
    PotentialDecompositionError,
    ProcessSpecError,
)
from taudirac.logger import logger
from taudirac.minkowski import METRIC, FourVector, OnShellMomentum, dot
from taudirac.propagators import (
    BACKWARD,
    FORWARD,
    FermionKernelSpec,
    boson_influence,
    internal_line,
    propagate,
    transverse_polarizations,
)
from taudirac.spinor_basis import CONTINUUM, PlaneWave

DEFAULT_COUPLING: float = math.sqrt(4 * math.pi * ALPHA)
CONSERVATION_TOLERANCE: float = 1e-9


@dataclass(frozen=True, slots=True, eq=False)
class PhotonLeg:
    """Real photon attached to a fermion line.

    Attributes:
        polarization (ndarray): Polarization four-vector ε.
        wavevector (FourVector): Null wavenumber k.
        incoming (bool): Absorbed (ε e^{ik·x}) or emitted (ε* e^{−ik·x}).
        normalization (float): Wave normalization.
    """

    polarization: npt.NDArray[np.complex128]
    wavevector: FourVector
    incoming: bool = True
    normalization: float = CONTINUUM

    def __post_init__(self) -> None:
        k = np.asarray(self.wavevector, dtype=np.float64)
        scale = max(1.0, k[0] ** 2)
        if abs(dot(k, k)) > CONSERVATION_TOLERANCE * scale:
            raise OffLightConeError(f'photon wavenumber {tuple(k)} is off the light cone.')
        if abs(dot(self.polarization, k)) > CONSERVATION_TOLERANCE * scale:
            raise OffLightConeError('photon polarization is not transverse to its wavenumber.')

    @property
    def vertex_polarization(self) -> npt.NDArray[np.complex128]:
        """Polarization entering the vertex."""
        eps = np.asarray(self.polarization, dtype=np.complex128)
        return eps if self.incoming else eps.conj()

    @property
    def vertex_wavevector(self) -> FourVector:
        """Wavevector of the vertex phase."""
        k = np.asarray(self.wavevector, dtype=np.float64)
        return k if self.incoming else -k

    @property
    def frequency(self) -> float:
        """τ-frequency ϖ with k·k = −ϖ², zero within tolerance of the light cone."""
        k = np.asarray(self.wavevector, dtype=np.float64)
        kk = dot(k, k)
        if abs(kk) <= CONSERVATION_TOLERANCE * max(1.0, k[0] ** 2):
            return 0.0
        return math.sqrt(max(-kk, 0.0))


@dataclass(frozen=True, slots=True, eq=False)
class FourierMode:
    """Potential with a definite four-momentum, A^μ(x) = ε^μ e^{ik·x}.

    Attributes:
        polarization (ndarray): Contravariant amplitude ε^μ.
        wavevector (FourVector): k.
        frequency (float): τ-frequency, zero for concatenated sources.
        normalizations (tuple): Normalizations of the waves sourcing the mode.
        factors (tuple): Conservation factors inherited from the source.
    """

    polarization: npt.NDArray[np.complex128]
    wavevector: FourVector
    frequency: float = 0.0
    normalizations: tuple[float, ...] = ()
    factors: tuple['ConservationFactor', ...] = ()

    def __call__(self, x: FourVector) -> npt.NDArray[np.complex128]:
        return self.polarization * np.exp(1j * dot(self.wavevector, x))


@dataclass(frozen=True, slots=True, eq=False)
class ConservationFactor:
    """Symbolic delta factor of an amplitude.

    `momentum` factors stand for (2π)⁴δ⁴(mismatch), `mass` factors for
    2πδ(mismatch) of a τ or σ integral.

    Attributes:
        kind (str): `momentum` or `mass`.
        label (str): Line the factor belongs to.
        mismatch (ndarray | float): Argument of the delta.
    """

    kind: str
    label: str
    mismatch: Any

    @property
    def satisfied(self) -> bool:
        """Delta argument vanishes."""
        return bool(np.abs(np.asarray(self.mismatch)).max() <= CONSERVATION_TOLERANCE)


@dataclass(frozen=True, slots=True, eq=False)
class AmplitudeResult:
    """Reduced amplitude.

    Attributes:
        reduced (complex): Spinor contraction M without wave normalizations.
        normalizations (tuple): One normalization per external wave.
        factors (tuple): Conservation factors.
    """

    reduced: complex
    normalizations: tuple[float, ...] = ()
    factors: tuple[ConservationFactor, ...] = ()

    @property
    def element(self) -> complex:
        """M times every wave normalization."""
        return self.reduced * math.prod(self.normalizations)

    def count(self, kind: str) -> int:
        """Return the number of conservation factors of a kind."""
        return sum(1 for f in self.factors if f.kind == kind)


@dataclass(frozen=True, slots=True, eq=False)
class ProcessSpec:
    """Waves and photons of one amplitude.

    Attributes:
        incident (tuple): Incident fermion waves.
        final (tuple): Final fermion waves.
        photons (tuple): Real photon legs in vertex order (A, B); B acts first.
        internal_boson (bool): Process exchanges a virtual boson.
    """

    incident: tuple[PlaneWave, ...]
    final: tuple[PlaneWave, ...]
    photons: tuple[PhotonLeg, ...] = ()
    internal_boson: bool = False

    @property
    def leading_sign(self) -> int:
        """+1 for a forward-propagating final wave, −1 for a backward one."""
        return 1 if self.final[0].branch > 0 and not self.final[0].antiparticle else -1

    @property
    def normalizations(self) -> tuple[float, ...]:
        """Normalizations of every external wave."""
        return tuple(w.normalization for w in (*self.incident, *self.final, *self.photons))


@dataclass(frozen=True, slots=True, eq=False)
class MollerCurrent:
    """Transition current J^λ(y) = N·j^λ·e^{ik·y}.

    Attributes:
        bilinear (ndarray): Contravariant spinor bilinear j^λ = ψ̄_out γ^λ ψ_in.
        wavevector (FourVector): k = k_in − k_out.
        normalizations (tuple): Normalizations of the outgoing and incoming waves.
        factor (ConservationFactor): 2πδ of the σ-concatenation.
        frequency (float): τ-frequency of the uncontracted current.
    """

    bilinear: npt.NDArray[np.complex128]
    wavevector: FourVector
    normalizations: tuple[float, float]
    factor: ConservationFactor
    frequency: float

    def __call__(self, y: FourVector, sigma: float = 0.0) -> npt.NDArray[np.complex128]:
        return math.prod(self.normalizations) * self.bilinear * np.exp(
            1j * (dot(self.wavevector, y) + self.frequency * sigma)
        )

    def divergence(self) -> complex:
        """Return k_λ j^λ, the contraction fixing ∂_λJ^λ = i k_λ J^λ."""
        return complex(dot(self.wavevector, self.bilinear))


def _bar(wave: PlaneWave) -> Spinor:
    return wave.spinor.conj() @ wave.gammas.gamma[0]


def moller_current(f_out: PlaneWave, f_in: PlaneWave) -> MollerCurrent:
    """Return the concatenated transition current of an incident f(+) wave.

    The σ integral of the current is reduced to the symbolic factor
    2πδ(ω_in − ω_out), constant in σ exactly when the masses match.

    Args:
        f_out (PlaneWave): Antiparticle wave h(−).
        f_in (PlaneWave): Incident f(+) wave.

    Returns:
        `MollerCurrent`.

    Raises:
        ProcessSpecError: f_in is not an f(+) wave or f_out is not an antiparticle wave.
        NormalizationMismatchError: the waves use different normalizations.
    """

    if f_in.branch != 1 or f_in.antiparticle or not f_out.antiparticle:
        raise ProcessSpecError('Møller current needs an incident f(+) and a final h(−) wave.')
    if f_in.normalization != f_out.normalization:
        raise NormalizationMismatchError(
            f'normalizations {f_out.normalization} and {f_in.normalization} differ.'
        )

    gamma = f_in.gammas.gamma
    bilinear = np.einsum('i,mij,j->m', _bar(f_out), gamma, f_in.spinor)
    frequency = f_in.frequency - f_out.frequency
    return MollerCurrent(
        bilinear=bilinear,
        wavevector=f_in.wavevector - f_out.wavevector,
        normalizations=(f_out.normalization, f_in.normalization),
        factor=ConservationFactor('mass', 'current', frequency),
        frequency=frequency,
    )


def boson_potential(
    current: MollerCurrent, coupling: float = DEFAULT_COUPLING, varpi: float = 0.0
) -> FourierMode:
    """Return the potential A^λ = e D^{λν}(k) J_ν sourced by a current.

    Args:
        current (MollerCurrent): Source current.
        coupling (float): (optional) Charge e.
        varpi (float): (optional) Boson mass, 0 for the photon.

    Returns:
        `FourierMode` carrying the source normalizations and mass factor.
    """

    influence = boson_influence(current.wavevector, varpi)
    polarization = coupling * influence @ (METRIC @ current.bilinear)
    return FourierMode(
        polarization=polarization,
        wavevector=np.asarray(current.wavevector, dtype=np.float64),
        normalizations=current.normalizations,
        factors=(current.factor,),
    )


def first_order_amplitude(
    spec: ProcessSpec, potential: Any, coupling: float = DEFAULT_COUPLING
) -> AmplitudeResult:
    """Return ±ie∫dτ∫d⁴x ψ̄_out slash(A) ψ_in for a plane wave potential.

    Args:
        spec (ProcessSpec): One incident and one final fermion wave.
        potential (FourierMode | None): Potential; None means A = 0.
        coupling (float): (optional) Charge e.

    Returns:
        `AmplitudeResult` with one momentum and one mass factor plus the
        factors carried by the potential.

    Raises:
        ProcessSpecError: not exactly one incident and one final wave.
        PotentialDecompositionError: potential has no definite four-momentum.
    """

    if len(spec.incident) != 1 or len(spec.final) != 1:
        raise ProcessSpecError('first order amplitudes need one incident and one final wave.')
    f_in, f_out = spec.incident[0], spec.final[0]
    if potential is None:
        return AmplitudeResult(0j, spec.normalizations)
    if not isinstance(potential, FourierMode):
        raise PotentialDecompositionError('supply Fourier mode')

    chain = _bar(f_out) @ slash(potential.polarization, f_in.gammas) @ f_in.spinor
    reduced = spec.leading_sign * 1j * coupling * chain
    factors = (
        ConservationFactor(
            'momentum', 'total', f_out.wavevector - f_in.wavevector - potential.wavevector
        ),
        ConservationFactor(
            'mass', 'vertex', f_out.frequency - f_in.frequency - potential.frequency
        ),
        *potential.factors,
    )
    return AmplitudeResult(
        complex(reduced), spec.normalizations + potential.normalizations, factors
    )


def _chain(
    spec: ProcessSpec, first: PhotonLeg, second: PhotonLeg, offset: float = 0.0
) -> complex:
    """ψ̄_out slash(ε_second) S(q) slash(ε_first) ψ_in with `first` attached to ψ_in."""

    f_in, f_out = spec.incident[0], spec.final[0]
    gammas = f_in.gammas
    q = f_in.wavevector + first.vertex_wavevector
    line = internal_line(q, f_in.frequency, gammas, offset)
    return complex(
        _bar(f_out)
        @ slash(second.vertex_polarization, gammas)
        @ line
        @ slash(first.vertex_polarization, gammas)
        @ f_in.spinor
    )


def second_order_amplitude(
    spec: ProcessSpec, coupling: float = DEFAULT_COUPLING, crossed: bool = True
) -> AmplitudeResult:
    """Return the second order amplitude of one fermion line with two photons.

    The internal line is the momentum space form of the fermion influence
    function, carrying the incident τ-frequency.

    Args:
        spec (ProcessSpec): One incident wave, one final wave, photons (A, B).
        coupling (float): (optional) Charge e.
        crossed (bool): (optional) Add the diagram with the photons exchanged.

    Returns:
        `AmplitudeResult` with one momentum factor and one mass factor per
        line: the fermion line and the line joining the two photons.

    Raises:
        ProcessSpecError: wrong number of waves or photons.
    """

    if len(spec.incident) != 1 or len(spec.final) != 1 or len(spec.photons) != 2:
        raise ProcessSpecError('second order amplitudes need one fermion line and two photons.')

    leg_a, leg_b = spec.photons
    logger.trace('second order chain, crossed=%s.', crossed)  # type: ignore
    chain = _chain(spec, leg_b, leg_a)
    if crossed:
        chain += _chain(spec, leg_a, leg_b)

    f_in, f_out = spec.incident[0], spec.final[0]
    mismatch = f_out.wavevector - f_in.wavevector - leg_a.vertex_wavevector - leg_b.vertex_wavevector
    factors = (
        ConservationFactor('momentum', 'total', mismatch),
        ConservationFactor('mass', 'fermion line', f_out.frequency - f_in.frequency),
        ConservationFactor('mass', 'photon line', leg_a.frequency - leg_b.frequency),
    )
    reduced = spec.leading_sign * 1j * coupling**2 * chain
    return AmplitudeResult(complex(reduced), spec.normalizations, factors)


def pair_annihilation_amplitude(
    spec: ProcessSpec, coupling: float = DEFAULT_COUPLING, crossed: bool = False
) -> AmplitudeResult:
    """Return −ie²⟨h̄(−)_f slash(A) Γ⁰₊ slash(B) f(+)_i⟩ reduced for plane waves.

    Raises:
        ProcessSpecError: incident wave is not f(+) or final wave is not h(−).
        OffLightConeError: photon legs off the light cone.
    """

    if spec.incident[0].branch != 1 or spec.incident[0].antiparticle:
        raise ProcessSpecError('pair annihilation needs an incident f(+) wave.')
    if not spec.final[0].antiparticle:
        raise ProcessSpecError('pair annihilation needs a final h(−) wave.')
    return second_order_amplitude(spec, coupling, crossed)


def compton_amplitude(
    spec: ProcessSpec, coupling: float = DEFAULT_COUPLING, crossed: bool = True
) -> AmplitudeResult:
    """Return the photon scattering amplitude of a forward final f(+) wave."""
    if spec.leading_sign < 0 or spec.incident[0].antiparticle:
        raise ProcessSpecError('Compton scattering needs f(+) incident and final waves.')
    return second_order_amplitude(spec, coupling, crossed)


def muon_pair_amplitude(
    p1: OnShellMomentum,
    p2: OnShellMomentum,
    p3: OnShellMomentum,
    p4: OnShellMomentum,
    spins: tuple[int, int, int, int] = (1, 1, 1, 1),
    coupling: float = DEFAULT_COUPLING,
    normalization: float = CONTINUUM,
    gammas: GammaBasis | None = None,
    source: str = 'electron',
) -> AmplitudeResult:
    """Return the e⁻e⁺ → μ⁻μ⁺ amplitude through a massless boson.

    The electron pair (f(+)_{p1} in, h(−)_{p2} out) sources a Møller
    current whose potential drives the muon vertex (h(−)_{p4} in,
    f(+)_{p3} out). With `source='muon'` the muon pair sources the
    potential and the electron vertex is driven instead; the two agree up
    to sign.

    Args:
        p1, p2, p3, p4 (OnShellMomentum): e⁻, e⁺, μ⁻, μ⁺ momenta, positive energy.
        spins (tuple): (optional) Spin labels of the four waves.
        coupling (float): (optional) Charge e.
        normalization (float): (optional) Wave normalization.
        gammas (GammaBasis): (optional) Representation.
        source (str): (optional) `electron` or `muon`.

    Returns:
        `AmplitudeResult` with one momentum factor and one mass factor per line.
    """

    gammas = gammas or representation()
    electron = PlaneWave(p1, 1, spins[0], normalization, False, gammas)
    positron = PlaneWave(p2, -1, spins[1], normalization, True, gammas)
    muon = PlaneWave(p3, 1, spins[2], normalization, False, gammas)
    antimuon = PlaneWave(p4, -1, spins[3], normalization, True, gammas)

    if source == 'electron':
        potential = boson_potential(moller_current(positron, electron), coupling)
        return first_order_amplitude(ProcessSpec((antimuon,), (muon,)), potential, coupling)

    bilinear = np.einsum('i,mij,j->m', _bar(muon), gammas.gamma, antimuon.spinor)
    current = MollerCurrent(
        bilinear=bilinear,
        wavevector=antimuon.wavevector - muon.wavevector,
        normalizations=(normalization, normalization),
        factor=ConservationFactor('mass', 'current', antimuon.frequency - muon.frequency),
        frequency=antimuon.frequency - muon.frequency,
    )
    potential = boson_potential(current, coupling)
    return first_order_amplitude(ProcessSpec((electron,), (positron,)), potential, coupling)


def summed_square(amplitudes: Iterable[AmplitudeResult]) -> float:
    """Return Σ|M|² over a collection of reduced amplitudes."""
    return float(sum(abs(a.reduced) ** 2 for a in amplitudes))


def particle_projector(p: FourVector, m: float, gammas: GammaBasis | None = None) -> SpinorMatrix:
    """Return Σ_s u_s ū_s = (m − slash(p))/(2m) for p⁰ > 0."""
    return (m * IDENTITY - slash(p, gammas)) / (2 * m)


def antiparticle_projector(p: FourVector, m: float, gammas: GammaBasis | None = None) -> SpinorMatrix:
    """Return Σ_s v_s v̄_s = −(m + slash(p))/(2m) for p⁰ > 0."""
    return -(m * IDENTITY + slash(p, gammas)) / (2 * m)


def _line_trace(
    out_projector: SpinorMatrix,
    in_projector: SpinorMatrix,
    chain: SpinorMatrix,
    gammas: GammaBasis,
) -> float:
    return float(np.trace(out_projector @ chain @ in_projector @ dirac_adjoint(chain, gammas)).real)


def _photon_chain(
    q_first: FourVector,
    q_second: FourVector,
    omega: float,
    eps_a: npt.NDArray[np.complex128],
    eps_b: npt.NDArray[np.complex128],
    gammas: GammaBasis,
) -> SpinorMatrix:
    a, b = slash(eps_a, gammas), slash(eps_b, gammas)
    return a @ internal_line(q_first, omega, gammas) @ b + b @ internal_line(q_second, omega, gammas) @ a


def compton_square(
    p: FourVector,
    k: FourVector,
    p_out: FourVector,
    k_out: FourVector,
    m: float,
    coupling: float = DEFAULT_COUPLING,
    gammas: GammaBasis | None = None,
) -> float:
    """Return Σ|M|² of e⁻γ → e⁻γ over spins and transverse polarizations by traces."""
    gammas = gammas or representation()
    total = 0.0
    for eps in transverse_polarizations(k):
        for eps_out in transverse_polarizations(k_out):
            chain = _photon_chain(
                np.asarray(p) + k, np.asarray(p) - k_out, m, eps_out, eps, gammas
            )
            total += _line_trace(
                particle_projector(p_out, m, gammas), particle_projector(p, m, gammas), chain, gammas
            )
    return coupling**4 * total


def annihilation_square(
    p1: FourVector,
    p2: FourVector,
    k1: FourVector,
    k2: FourVector,
    m: float,
    coupling: float = DEFAULT_COUPLING,
    gammas: GammaBasis | None = None,
) -> float:
    """Return Σ|M|² of e⁻e⁺ → γγ over spins and transverse polarizations by traces."""
    gammas = gammas or representation()
    total = 0.0
    for eps1 in transverse_polarizations(k1):
        for eps2 in transverse_polarizations(k2):
            chain = _photon_chain(
                np.asarray(p1) - k2, np.asarray(p1) - k1, m, eps1, eps2, gammas
            )
            total += _line_trace(
                antiparticle_projector(p2, m, gammas), particle_projector(p1, m, gammas), chain, gammas
            )
    return coupling**4 * total


def muon_pair_square(
    p1: FourVector,
    p2: FourVector,
    p3: FourVector,
    p4: FourVector,
    m_e: float,
    m_mu: float,
    coupling: float = DEFAULT_COUPLING,
    gammas: GammaBasis | None = None,
) -> float:
    """Return Σ|M|² of e⁻e⁺ → μ⁻μ⁺ over spins by traces."""
    gammas = gammas or representation()
    gamma = gammas.gamma
    k = np.asarray(p1) + p2
    electron = np.einsum(
        'ij,ajk,kl,bli->ab',
        antiparticle_projector(p2, m_e, gammas), gamma, particle_projector(p1, m_e, gammas), gamma,
    )
    muon = np.einsum(
        'ij,ajk,kl,bli->ab',
        particle_projector(p3, m_mu, gammas), gamma, antiparticle_projector(p4, m_mu, gammas), gamma,
    )
    metric = np.diag(METRIC)
    contraction = np.einsum('a,b,ab,ab->', metric, metric, muon, electron)
    return float((coupling**4 * contraction / dot(k, k) ** 2).real)


@dataclass(frozen=True, slots=True, eq=False)
class VertexExpansion:
    """Wave split at a trivial vertex on the surface τ = ρ.

    Attributes:
        wave (PlaneWave): Leg attached to the trivial vertex at parameter ρ.
        rho (float): Parameter of the trivial vertex.
        forward (FermionKernelSpec): Single-mode grid of Γ⁰₊.
        backward (FermionKernelSpec): Single-mode grid of Γ⁰₋.
    """

    wave: PlaneWave
    rho: float
    forward: FermionKernelSpec
    backward: FermionKernelSpec

    def propagated(self, x: FourVector, tau: float) -> Spinor:
        """Return the propagated leg (1/i)∫d⁴z{θ(τ−ρ)Γ⁰₊ − θ(ρ−τ)Γ⁰₋}ψ(z, ρ)."""
        if tau > self.rho:
            return propagate(self.forward, self.wave, x, tau, self.rho)
        return -propagate(self.backward, self.wave, x, tau, self.rho)

    def __call__(self, x: FourVector, tau: float) -> Spinor:
        return self.propagated(x, tau)


def virtual_vertex_expand(wave: PlaneWave, rho: float) -> VertexExpansion:
    """Express a positive energy wave through a trivial vertex at τ = ρ.

    Recomposition reproduces the wave pointwise for τ ≠ ρ; f(+) waves
    with τ > ρ only need the forward branch.

    Args:
        wave (PlaneWave): f(+) or h(−) wave of a positive energy momentum.
        rho (float): Parameter of the trivial vertex.

    Returns:
        `VertexExpansion`.
    """

    p = wave.momentum.p
    return VertexExpansion(
        wave=wave,
        rho=rho,
        forward=FermionKernelSpec.single_mode(p, FORWARD, wave.gammas),
        backward=FermionKernelSpec.single_mode(p, BACKWARD, wave.gammas),
    )


@dataclass(frozen=True, slots=True)
class DiagramCount:
    """Vertex and leg counts of a diagram."""

    physical_vertices: int
    trivial_vertices: int
    physical_legs: int
    virtual_legs: int

    @property
    def vertices(self) -> int:
        """Physical and trivial vertices."""
        return self.physical_vertices + self.trivial_vertices

    @property
    def fermion_legs(self) -> int:
        """Legs attached to fermion lines, physical or virtual."""
        return self.physical_legs + self.virtual_legs


def expand_diagram(count: DiagramCount, expanded_legs: int) -> DiagramCount:
    """Insert one trivial vertex on each of `expanded_legs` physical legs.

    Every trivial vertex keeps its physical leg and adds a virtual leg
    towards the physical vertex.
    """

    if not 0 <= expanded_legs <= count.physical_legs:
        raise ProcessSpecError(f'cannot expand {expanded_legs} of {count.physical_legs} legs.')
    return DiagramCount(
        physical_vertices=count.physical_vertices,
        trivial_vertices=count.trivial_vertices + expanded_legs,
        physical_legs=count.physical_legs,
        virtual_legs=count.virtual_legs + expanded_legs,
    )


MUON_PAIR_DIAGRAM = DiagramCount(physical_vertices=2, trivial_vertices=0, physical_legs=4, virtual_legs=0)


def transition_frequency(f_in: PlaneWave, f_out: PlaneWave) -> float:
    """Return the τ-frequency ω_in − ω_out of ψ̄_out ψ_in."""
    return f_in.frequency - f_out.frequency


def tau_window_overlap(omega: float, half_width: float) -> float:
    """Return (1/2T)∫_{−T}^{T} e^{iωτ} dτ = sin(ωT)/(ωT).

    Tends to zero as T grows unless ω = 0, which makes lone transitions
    between unmatched τ-frequencies vanish.
    """

    return float(np.sinc(omega * half_width / math.pi))
