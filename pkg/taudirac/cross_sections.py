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

"""Parametrized cross-section recipe with regularization bookkeeping.

The recipe normalizes every wave in a space-time 4-cube of edge L,
squares the amplitude, divides the squared conservation deltas into a
rate per unit 4-volume and per unit τ, multiplies by the target density
and the final phase space, divides by the incident flux and finally by
the proper-time interval. Powers of L and of 2πδ(0) in τ are tracked as
integers on `RegScalar` and must cancel for a physical cross section.

    Typical usage example:

    result = cross_section('mu-pair', load_config(overrides={'sqrt_s': '500'}))
"""

import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Iterable, Sequence

import numpy as np
import numpy.typing as npt

from taudirac import oracles
from taudirac.amplitudes import (
    AmplitudeResult,
    ConservationFactor,
    PhotonLeg,
    ProcessSpec,
    annihilation_square,
    compton_amplitude,
    compton_square,
    muon_pair_amplitude,
    muon_pair_square,
    pair_annihilation_amplitude,
)
from taudirac.clifford import GammaBasis, representation
from taudirac.config import RunConfig
from taudirac.exceptions import (
    DegenerateFluxError,
    MissingConservationFactorError,
    NormalizationMismatchError,
    RegularizationError,
    ThresholdError,
    UnknownProcessError,
)
from taudirac.logger import logger
from taudirac.minkowski import FourVector, OnShellMomentum, dot
from taudirac.propagators import transverse_polarizations
from taudirac.spinor_basis import PlaneWave
from taudirac.sweep import gather_ordered

TWO_PI = 2 * math.pi


@dataclass(frozen=True, slots=True)
class RegScalar:
    """Real value times L^power_L times (2πδ(0))^power_dtau.

    The numeric value already contains the powers of L; only the τ delta
    is purely symbolic.

    Attributes:
        value (float): Numeric part.
        power_L (int): Power of the box edge L.
        power_dtau (int): Power of the τ interval 2πδ(0).
    """

    value: float
    power_L: int = 0
    power_dtau: int = 0

    def __mul__(self, other: 'RegScalar | float') -> 'RegScalar':
        if isinstance(other, RegScalar):
            return RegScalar(
                self.value * other.value,
                self.power_L + other.power_L,
                self.power_dtau + other.power_dtau,
            )
        return RegScalar(self.value * other, self.power_L, self.power_dtau)

    __rmul__ = __mul__

    def __truediv__(self, other: 'RegScalar | float') -> 'RegScalar':
        if isinstance(other, RegScalar):
            return RegScalar(
                self.value / other.value,
                self.power_L - other.power_L,
                self.power_dtau - other.power_dtau,
            )
        return RegScalar(self.value / other, self.power_L, self.power_dtau)

    def __add__(self, other: 'RegScalar') -> 'RegScalar':
        if (self.power_L, self.power_dtau) != (other.power_L, other.power_dtau):
            raise RegularizationError(f'cannot add {self} and {other}.')
        return RegScalar(self.value + other.value, self.power_L, self.power_dtau)

    @property
    def physical(self) -> bool:
        """Every regularization power has cancelled."""
        return self.power_L == 0 and self.power_dtau == 0


@dataclass(frozen=True, slots=True)
class AuditStep:
    """One recipe step: the factor applied and the running product."""

    label: str
    factor: RegScalar
    running: RegScalar

    def as_dict(self) -> dict[str, Any]:
        """Return a JSON-ready dictionary."""
        return {
            'step': self.label,
            'factor': {'value': self.factor.value, 'power_L': self.factor.power_L, 'power_dtau': self.factor.power_dtau},
            'power_L': self.running.power_L,
            'power_dtau': self.running.power_dtau,
        }


class Ledger:
    """Running product of recipe factors with an audit trail."""

    def __init__(self, label: str, start: RegScalar) -> None:
        self.steps: list[AuditStep] = [AuditStep(label, start, start)]

    @property
    def result(self) -> RegScalar:
        """Current running product."""
        return self.steps[-1].running

    def mul(self, label: str, factor: RegScalar) -> 'Ledger':
        self.steps.append(AuditStep(label, factor, self.result * factor))
        return self

    def div(self, label: str, factor: RegScalar) -> 'Ledger':
        inverse = RegScalar(1 / factor.value, -factor.power_L, -factor.power_dtau)
        return self.mul(label, inverse)


@dataclass(frozen=True, slots=True, eq=False)
class SquaredAmplitude:
    """Spin-summed |M|² with the bookkeeping of its amplitudes.

    Attributes:
        square (float): Σ|M|² without wave normalizations.
        normalizations (tuple): One normalization per external wave.
        factors (tuple): Conservation factors of each amplitude.
    """

    square: float
    normalizations: tuple[float, ...]
    factors: tuple[ConservationFactor, ...]

    def count(self, kind: str) -> int:
        """Return the number of conservation factors of a kind."""
        return sum(1 for f in self.factors if f.kind == kind)


def box_normalize(w: Any, L: float) -> Any:
    """Return a wave or photon leg with normalization 1/L² instead of 1/(2π)²."""
    if not L > 0:
        raise ValueError(f'box edge must be positive, got {L}.')
    return replace(w, normalization=1 / L**2)


def rate_steps(a: AmplitudeResult | SquaredAmplitude, L: float) -> Ledger:
    """Return the ledger of the rate per unit 4-volume and per unit τ.

    |S|² holds (2π)⁴δ⁴(0) = L⁴ once and one 2πδ(0) per mass delta; the
    rate divides by (2π)⁴δ⁴(0)·2πδ(0).

    Args:
        a (AmplitudeResult | SquaredAmplitude): Box-normalized amplitude.
        L (float): Box edge.

    Returns:
        `Ledger` whose result is the rate.

    Raises:
        MissingConservationFactorError: no momentum delta or no mass delta.
        NormalizationMismatchError: a wave is not box normalized.
    """

    if a.count('momentum') != 1 or a.count('mass') < 1:
        raise MissingConservationFactorError(
            f'need one momentum and at least one mass factor, got {[f.kind for f in a.factors]}.'
        )
    box = 1 / L**2
    if any(not math.isclose(n, box, rel_tol=1e-12) for n in a.normalizations):
        raise NormalizationMismatchError(f'waves are not normalized in a box of edge {L}.')

    square = a.square if isinstance(a, SquaredAmplitude) else abs(a.reduced) ** 2
    if not all(f.satisfied for f in a.factors):
        square = 0.0
    waves = len(a.normalizations)

    ledger = Ledger('|S|² with box normalized waves', RegScalar(square * box ** (2 * waves), -4 * waves, 0))
    ledger.mul('(2π)⁴δ⁴(0) = L⁴', RegScalar(L**4, 4, 0))
    ledger.mul('mass deltas squared', RegScalar(1.0, 0, a.count('mass')))
    ledger.div('rate per 4-volume and τ', RegScalar(L**4, 4, 1))
    return ledger


def rate_from_amplitude(a: AmplitudeResult | SquaredAmplitude, L: float) -> RegScalar:
    """Return the rate per unit 4-volume and per unit τ of an amplitude."""
    return rate_steps(a, L).result


def incident_flux(
    p1: OnShellMomentum | FourVector,
    p2: OnShellMomentum | FourVector,
    L: float,
) -> RegScalar:
    """Return J = √((p₁·p₂)² − m₁²m₂²)/(n₁n₂L⁴).

    The density n is the mass for a fermion and ½ for a photon given as a
    bare null four-vector.

    Raises:
        DegenerateFluxError: radicand ≤ 0.
    """

    def unpack(p: OnShellMomentum | FourVector) -> tuple[FourVector, float, float]:
        if isinstance(p, OnShellMomentum):
            return p.p, p.m, p.m
        return np.asarray(p, dtype=np.float64), 0.0, 0.5

    v1, m1, n1 = unpack(p1)
    v2, m2, n2 = unpack(p2)
    radicand = dot(v1, v2) ** 2 - m1**2 * m2**2
    if not radicand > 0:
        raise DegenerateFluxError(f'incident flux radicand {radicand} is not positive.')
    return RegScalar(math.sqrt(radicand) / (n1 * n2 * L**4), -4, 0)


def mass_jacobian(p: OnShellMomentum | FourVector) -> float:
    """Return dp⁰/dm at fixed **p**: m/E for a fermion, 1/(2ω) for a photon."""
    if isinstance(p, OnShellMomentum):
        return p.m / p.energy
    return 1 / (2 * abs(float(np.asarray(p)[0])))


def phase_space_count(
    final: Sequence[OnShellMomentum | FourVector], L: float
) -> list[RegScalar]:
    """Return L⁴d⁴p/(2π)⁴ per final particle after the mass integral.

    δ(m_f − m_i)dp⁰ = δ(m_f − m_i)(m_f/E_f)dm_f, and the integral over
    2πδ(m_f − m_i)dm_f leaves 2π, so each factor is L⁴·2π·(dp⁰/dm)/(2π)⁴
    times d³p.
    """

    return [RegScalar(L**4 * TWO_PI * mass_jacobian(p) / TWO_PI**4, 4, 0) for p in final]


@dataclass(frozen=True, slots=True, eq=False)
class TwoBodyKinematics:
    """Momenta of a 2 → 2 reaction with particle 3 along n̂(θ)."""

    p1: FourVector
    p2: FourVector
    p3: FourVector
    p4: FourVector
    cos_theta: float

    @property
    def total(self) -> FourVector:
        """Total four-momentum."""
        return np.asarray(self.p1) + self.p2

    @property
    def s(self) -> float:
        """Invariant −P·P."""
        return -dot(self.total, self.total)

    @property
    def k(self) -> float:
        """|**p**₃|."""
        return float(np.linalg.norm(self.p3[1:]))

    @property
    def projection(self) -> float:
        """**P**·n̂."""
        return float(self.total[1:] @ self.p3[1:]) / self.k


def direction(cos_theta: float) -> npt.NDArray[np.float64]:
    """Return n̂ = (sin θ, 0, cos θ)."""
    return np.array([math.sqrt(max(0.0, 1 - cos_theta**2)), 0.0, cos_theta])


def solve_two_body(
    p1: FourVector, p2: FourVector, m3: float, m4: float, cos_theta: float
) -> TwoBodyKinematics:
    """Return the final momenta with particle 3 emitted along n̂(θ).

    |**p**₃| = [A b + a√(A² − (a² − b²)m₃²)]/(a² − b²) with a = E, b = **P**·n̂
    and A = (s + m₃² − m₄²)/2.

    Raises:
        ThresholdError: the final masses are not reachable.
    """

    total = np.asarray(p1, dtype=np.float64) + p2
    n = direction(cos_theta)
    a, b = total[0], float(total[1:] @ n)
    s = -dot(total, total)
    big_a = (s + m3**2 - m4**2) / 2
    radicand = big_a**2 - (a**2 - b**2) * m3**2
    if s <= (m3 + m4) ** 2 or radicand < 0:
        raise ThresholdError(f'√s = {math.sqrt(max(s, 0.0))} is below the {m3 + m4} threshold.')
    k = (big_a * b + a * math.sqrt(radicand)) / (a**2 - b**2)
    p3 = np.concatenate(([math.sqrt(k**2 + m3**2)], k * n))
    return TwoBodyKinematics(np.asarray(p1), np.asarray(p2), p3, total - p3, cos_theta)


def two_body_factor(kin: TwoBodyKinematics) -> float:
    """Return ∫d³p₃d³p₄(2π)⁴δ⁴(P − p₃ − p₄) per unit solid angle.

    (2π)⁴ k²E₃E₄/(kE − E₃ **P**·n̂).
    """

    e3, e4 = kin.p3[0], kin.p4[0]
    return TWO_PI**4 * kin.k**2 * e3 * e4 / (kin.k * kin.total[0] - e3 * kin.projection)


@dataclass(frozen=True, slots=True, eq=False)
class Process:
    """2 → 2 process definition.

    Attributes:
        name (str): Process name used by the command line.
        frame (str): Frame of the angle grid.
        masses (Callable): Final masses (m₃, m₄) of a configuration.
        incident (Callable): Incident (p₁, p₂) of a configuration; fermions
            as `OnShellMomentum`, photons as bare null four-vectors.
        square (Callable): Σ|M|² by traces.
        amplitudes (Callable): Spin and polarization resolved amplitudes.
        fermions (Callable): Masses of the external fermions.
        oracle_total (Callable): Closed-form σ.
        oracle_differential (Callable | None): Closed-form dσ/dΩ.
        identical (bool): Final particles are identical.
        initial_states (int): Number of averaged initial spin states.
    """

    name: str
    frame: str
    masses: Callable[[RunConfig], tuple[float, float]]
    incident: Callable[[RunConfig], tuple[Any, Any]]
    square: Callable[..., float]
    amplitudes: Callable[..., Iterable[AmplitudeResult]]
    fermions: Callable[[RunConfig], tuple[float, ...]]
    oracle_total: Callable[[RunConfig], float]
    oracle_differential: Callable[[RunConfig, npt.NDArray[np.float64]], npt.NDArray[np.float64]] | None = None
    identical: bool = False
    initial_states: int = 4


def _vector(p: Any) -> FourVector:
    return p.p if isinstance(p, OnShellMomentum) else np.asarray(p, dtype=np.float64)


def _collider(sqrt_s: float, m: float) -> tuple[OnShellMomentum, OnShellMomentum]:
    if sqrt_s <= 2 * m:
        raise ThresholdError(f'√s = {sqrt_s} is below the 2m = {2 * m} threshold.')
    momentum = math.sqrt(sqrt_s**2 / 4 - m**2)
    return (
        OnShellMomentum.from_mass(m, (0.0, 0.0, momentum)),
        OnShellMomentum.from_mass(m, (0.0, 0.0, -momentum)),
    )


def _muon_pair_amplitudes(
    kin: TwoBodyKinematics, config: RunConfig, gammas: GammaBasis, L: float
) -> Iterable[AmplitudeResult]:
    p1 = OnShellMomentum(kin.p1, config.m_e, 1)
    p2 = OnShellMomentum(kin.p2, config.m_e, 1)
    p3 = OnShellMomentum.from_mass(config.m_mu, kin.p3[1:])
    p4 = OnShellMomentum.from_mass(config.m_mu, kin.p4[1:])
    for spins in np.ndindex(2, 2, 2, 2):
        yield muon_pair_amplitude(
            p1, p2, p3, p4, tuple(s + 1 for s in spins), config.coupling, 1 / L**2, gammas
        )


def _photon_amplitudes(
    kin: TwoBodyKinematics, config: RunConfig, gammas: GammaBasis, L: float, compton: bool
) -> Iterable[AmplitudeResult]:
    m = config.m_e
    box = 1 / L**2
    electron = OnShellMomentum(kin.p1, m, 1)
    if compton:
        out = OnShellMomentum.from_mass(m, kin.p4[1:])
        first, second = (kin.p2, True), (kin.p3, False)
    else:
        out = OnShellMomentum(kin.p2, m, 1)
        first, second = (kin.p3, False), (kin.p4, False)
    for s_in, s_out in np.ndindex(2, 2):
        incident = PlaneWave(electron, 1, s_in + 1, box, False, gammas)
        if compton:
            final = PlaneWave(out, 1, s_out + 1, box, False, gammas)
        else:
            final = PlaneWave(out, -1, s_out + 1, box, True, gammas)
        for eps_a in transverse_polarizations(first[0]):
            for eps_b in transverse_polarizations(second[0]):
                legs = (
                    PhotonLeg(eps_a, first[0], first[1], box),
                    PhotonLeg(eps_b, second[0], second[1], box),
                )
                spec = ProcessSpec((incident,), (final,), legs)
                if compton:
                    yield compton_amplitude(spec, config.coupling, crossed=True)
                else:
                    yield pair_annihilation_amplitude(spec, config.coupling, crossed=True)


PROCESSES: dict[str, Process] = {
    'mu-pair': Process(
        name='mu-pair',
        frame='centre of mass',
        masses=lambda c: (c.m_mu, c.m_mu),
        incident=lambda c: _collider(c.sqrt_s, c.m_e),
        square=lambda kin, c, g: muon_pair_square(kin.p1, kin.p2, kin.p3, kin.p4, c.m_e, c.m_mu, c.coupling, g),
        amplitudes=_muon_pair_amplitudes,
        fermions=lambda c: (c.m_e, c.m_e, c.m_mu, c.m_mu),
        oracle_total=lambda c: oracles.muon_pair_total(c.sqrt_s**2, c.m_e, c.m_mu, c.alpha),
        oracle_differential=lambda c, x: oracles.muon_pair_differential(c.sqrt_s**2, x, c.m_e, c.m_mu, c.alpha),
    ),
    'compton': Process(
        name='compton',
        frame='electron rest frame',
        masses=lambda c: (0.0, c.m_e),
        incident=lambda c: (
            OnShellMomentum.from_mass(c.m_e, (0.0, 0.0, 0.0)),
            np.array([c.omega, 0.0, 0.0, c.omega]),
        ),
        square=lambda kin, c, g: compton_square(kin.p1, kin.p2, kin.p4, kin.p3, c.m_e, c.coupling, g),
        amplitudes=lambda kin, c, g, L: _photon_amplitudes(kin, c, g, L, compton=True),
        fermions=lambda c: (c.m_e, c.m_e),
        oracle_total=lambda c: oracles.klein_nishina_total(c.omega, c.m_e, c.alpha),
        oracle_differential=lambda c, x: oracles.klein_nishina(c.omega, x, c.m_e, c.alpha),
    ),
    'annihilation': Process(
        name='annihilation',
        frame='centre of mass',
        masses=lambda c: (0.0, 0.0),
        incident=lambda c: _collider(c.sqrt_s, c.m_e),
        square=lambda kin, c, g: annihilation_square(kin.p1, kin.p2, kin.p3, kin.p4, c.m_e, c.coupling, g),
        amplitudes=lambda kin, c, g, L: _photon_amplitudes(kin, c, g, L, compton=False),
        fermions=lambda c: (c.m_e, c.m_e),
        oracle_total=lambda c: oracles.annihilation_total(c.sqrt_s**2, c.m_e, c.alpha),
        identical=True,
    ),
}


@dataclass(frozen=True, eq=False)
class XSecResult:
    """Cross section of a process.

    Attributes:
        process (str): Process name.
        cos_theta (ndarray): Angle grid.
        dsigma_domega (ndarray): dσ/dΩ on the grid.
        sigma (float): Total cross section.
        audit (list): Regularization trail of one grid point.
        metadata (dict): Kinematics, units and oracle comparisons.
    """

    process: str
    cos_theta: npt.NDArray[np.float64]
    dsigma_domega: npt.NDArray[np.float64]
    sigma: float
    audit: list[AuditStep] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    def audit_dict(self) -> dict[str, Any]:
        """Return the JSON audit object."""
        return {
            'process': self.process,
            'sigma': self.sigma,
            'regularization': [step.as_dict() for step in self.audit],
            **self.metadata,
        }


def _squared(
    model: Process, kin: TwoBodyKinematics, config: RunConfig, gammas: GammaBasis, method: str
) -> tuple[float, list[AmplitudeResult | SquaredAmplitude]]:
    L = config.box_edge
    if method == 'spins':
        amplitudes: list[AmplitudeResult | SquaredAmplitude] = list(model.amplitudes(kin, config, gammas, L))
        return sum(abs(a.reduced) ** 2 for a in amplitudes), amplitudes
    # the trace sum shares the normalizations and deltas of every spin amplitude
    first = next(iter(model.amplitudes(kin, config, gammas, L)))
    square = model.square(kin, config, gammas)
    return square, [SquaredAmplitude(square, first.normalizations, first.factors)]


def differential(
    model: Process,
    config: RunConfig,
    cos_theta: float,
    gammas: GammaBasis | None = None,
    method: str = 'traces',
) -> tuple[RegScalar, list[AuditStep], float]:
    """Return dσ/dΩ at one angle, its audit trail and the textbook value.

    Args:
        model (Process): Process definition.
        config (RunConfig): Run configuration.
        cos_theta (float): Angle of particle 3.
        gammas (GammaBasis): (optional) Representation.
        method (str): (optional) `traces` or `spins`.

    Returns:
        Tuple of the recipe `RegScalar`, its steps and the textbook 2 → 2 value
        computed from the same |M|².

    Raises:
        RegularizationError: powers do not cancel.
    """

    gammas = gammas or representation(config.representation)
    L = config.box_edge
    p1, p2 = model.incident(config)
    m3, m4 = model.masses(config)
    kin = solve_two_body(_vector(p1), _vector(p2), m3, m4, cos_theta)
    square, amplitudes = _squared(model, kin, config, gammas, method)

    ledgers = [rate_steps(amplitude, L) for amplitude in amplitudes]
    rate = ledgers[0].result
    for other in ledgers[1:]:
        rate = rate + other.result

    run = Ledger('summed rate', rate)
    run.mul('target density L⁴', RegScalar(L**4, 4, 0))
    finals = [kin.p3 if m3 == 0 else OnShellMomentum(kin.p3, m3, 1), kin.p4 if m4 == 0 else OnShellMomentum(kin.p4, m4, 1)]
    for index, factor in enumerate(phase_space_count(finals, L), start=3):
        run.mul(f'phase space of particle {index}', factor)
    run.mul('two-body delta integral', RegScalar(two_body_factor(kin)))
    run.div('incident flux', incident_flux(p1, p2, L))
    run.div('proper-time interval 2πδ(0)', RegScalar(1.0, 0, 1))
    run.mul('initial spin average', RegScalar(1 / model.initial_states))

    result = run.result
    if not result.physical:
        raise RegularizationError(
            f'residual powers L^{result.power_L} δ(0)^{result.power_dtau} for {model.name}.'
        )

    spinor_scale = math.prod(2 * m for m in model.fermions(config))
    v1, v2 = _vector(p1), _vector(p2)
    m1 = p1.m if isinstance(p1, OnShellMomentum) else 0.0
    m2 = p2.m if isinstance(p2, OnShellMomentum) else 0.0
    flux = math.sqrt(dot(v1, v2) ** 2 - m1**2 * m2**2)
    standard = oracles.standard_differential(
        square * spinor_scale / model.initial_states, flux, kin.k, kin.total[0], kin.p3[0], kin.projection
    )
    return result, ledgers[0].steps + run.steps, standard


def cross_section(
    process: str, config: RunConfig, method: str = 'traces', gammas: GammaBasis | None = None
) -> XSecResult:
    """Return the spin-averaged dσ/dΩ on the angle grid and the total σ.

    Args:
        process (str): `mu-pair`, `compton` or `annihilation`.
        config (RunConfig): Run configuration.
        method (str): (optional) Σ|M|² by `traces` or by explicit `spins`.
        gammas (GammaBasis): (optional) Representation, defaults to the configured one.

    Returns:
        `XSecResult` with the regularization audit and oracle comparisons.

    Raises:
        UnknownProcessError: unknown process name.
        ThresholdError: below threshold.
        RegularizationError: residual regularization powers.
    """

    try:
        model = PROCESSES[process]
    except KeyError as err:
        raise UnknownProcessError(f'"{process}" is not one of {", ".join(PROCESSES)}.') from err

    gammas = gammas or representation(config.representation)
    logger.debug('Cross section %s, method=%s, representation=%s.', process, method, gammas.name)

    grid = np.linspace(-1.0, 1.0, config.grid_points)
    points = gather_ordered(
        lambda c: differential(model, config, float(c), gammas, method), grid, config.workers
    )
    values = np.array([p[0].value for p in points])
    standard = np.array([p[2] for p in points])
    if (values < 0).any():
        raise RegularizationError(f'negative dσ/dΩ in {process}.')

    nodes, weights = np.polynomial.legendre.leggauss(config.quadrature_order)
    quadrature = gather_ordered(
        lambda c: differential(model, config, float(c), gammas, method)[0].value, nodes, config.workers
    )
    sigma = TWO_PI * float(weights @ np.array(quadrature))
    if model.identical:
        sigma /= 2

    oracle_total = model.oracle_total(config)
    metadata: dict[str, Any] = {
        'frame': model.frame,
        'box_edge': config.box_edge,
        'representation': gammas.name,
        'method': method,
        'units': 'MeV natural units; dsigma_domega in MeV^-2 sr^-1',
        'sqrt_s': config.sqrt_s if process != 'compton' else None,
        'omega': config.omega if process == 'compton' else None,
        'sigma_oracle': oracle_total,
        'sigma_relative_delta': abs(sigma - oracle_total) / oracle_total,
        'standard_max_relative_delta': float(np.max(np.abs(values - standard) / standard)),
    }
    if model.oracle_differential is not None:
        reference = model.oracle_differential(config, grid)
        metadata['differential_max_relative_delta'] = float(np.max(np.abs(values - reference) / reference))

    logger.info('%s: sigma = %.12g (oracle %.12g).', process, sigma, oracle_total)
    return XSecResult(process, grid, values, sigma, points[0][1], metadata)
