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

"""Fermion and vector boson influence functions.

The fermion influence functions Γ⁰± are sums over a finite momentum grid
of f(+)_p f̄(+)_p − h(−)_p h̄(−)_p outer products. Space-time integrals of
grid modes are evaluated through mode orthogonality: on the grid
(2π)⁴δ⁴(p − q) becomes a Kronecker delta divided by the cell weight, so
reproduction properties hold exactly. Boson influence functions live in
(k, ϖ) space.
"""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import numpy.typing as npt
from scipy.linalg import null_space

from taudirac.clifford import GammaBasis, IDENTITY, Spinor, SpinorMatrix, representation, slash
from taudirac.exceptions import (
    MasslessNumeratorError,
    OffLightConeError,
    PoleError,
    ThetaAmbiguityError,
)
from taudirac.logger import logger
from taudirac.minkowski import METRIC, FourVector, OnShellMomentum, boost_to, dot
from taudirac.spinor_basis import CONTINUUM, PlaneWave
from taudirac.sweep import gather_ordered, ordered_sum

Event = tuple[FourVector, float]

FORWARD = 1
BACKWARD = -1
MATCH_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True, eq=False)
class FermionKernelSpec:
    """Momentum grid of a fermion influence function.

    Attributes:
        modes (ndarray): (n, 4) array of subluminal grid momenta, p⁰ ≠ 0.
        weights (ndarray): (n,) array of cell weights.
        direction (int): `FORWARD` for Γ⁰₊, `BACKWARD` for Γ⁰₋.
        gammas (GammaBasis): Representation of the mode spinors.
    """

    modes: npt.NDArray[np.float64]
    weights: npt.NDArray[np.float64]
    direction: int = FORWARD
    gammas: GammaBasis | None = None

    def __post_init__(self) -> None:
        if self.modes.ndim != 2 or self.modes.shape[1] != 4:
            raise ValueError('modes must be an (n, 4) array.')
        if self.weights.shape != (len(self.modes),):
            raise ValueError('one weight per mode is required.')
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f'invalid direction {self.direction}.')
        # OnShellMomentum.of rejects p⁰ = 0 and spacelike modes
        for mode in self.modes:
            OnShellMomentum.of(mode)

    @classmethod
    def single_mode(
        cls, p: FourVector, direction: int = FORWARD, gammas: GammaBasis | None = None
    ) -> 'FermionKernelSpec':
        """Return the one-mode grid {p} with unit weight."""
        return cls(np.asarray([p], dtype=np.float64), np.ones(1), direction, gammas)

    def momenta(self) -> list[OnShellMomentum]:
        """Grid momenta as on-shell values of their own mass."""
        return [OnShellMomentum.of(mode) for mode in self.modes]


@dataclass(frozen=True, slots=True, eq=False)
class KernelTerm:
    """One summand c·ψ(w)ψ̄(w′) of a fermion influence function.

    Attributes:
        coefficient (complex): Prefactor, θ factors and cell weight.
        left (PlaneWave): Wave evaluated at w.
        right (PlaneWave): Wave whose adjoint is evaluated at w′.
    """

    coefficient: complex
    left: PlaneWave
    right: PlaneWave

    def matrix(self, event: Event, event_prime: Event) -> SpinorMatrix:
        """Return the summand as a 4×4 matrix."""
        return self.coefficient * np.outer(self.left(*event), self.right.bar(*event_prime))


def theta_coefficient(direction: int, delta_tau: float, energy: float) -> float:
    """Return the θ-function combination of Γ⁰₊ or Γ⁰₋ for Δτ and p⁰.

    Γ⁰₊ carries θ(Δτ)θ(p⁰) − θ(−Δτ)θ(−p⁰), Γ⁰₋ carries
    θ(−Δτ)θ(p⁰) − θ(Δτ)θ(−p⁰).
    """

    if delta_tau == 0:
        raise ThetaAmbiguityError('θ(τ − τ′) is ambiguous at τ = τ′.')
    later = delta_tau > 0 if direction == FORWARD else delta_tau < 0
    if energy > 0:
        return 1.0 if later else 0.0
    return 0.0 if later else -1.0


def _prefactor(direction: int) -> complex:
    return 1j if direction == FORWARD else -1j


def _mode_waves(p: OnShellMomentum, gammas: GammaBasis | None) -> list[tuple[int, PlaneWave]]:
    gammas = gammas or representation()
    waves: list[tuple[int, PlaneWave]] = []
    for spin in (1, 2):
        waves.append((1, PlaneWave(p, 1, spin, CONTINUUM, False, gammas)))
        waves.append((-1, PlaneWave(p, -1, spin, CONTINUUM, True, gammas)))
    return waves


def kernel_terms(spec: FermionKernelSpec, delta_tau: float) -> list[KernelTerm]:
    """Return the nonvanishing summands of Γ⁰± for a parameter difference.

    Only f(+)f̄(+) and h(−)h̄(−) pairs appear; mixed pairs are
    kinematically excluded and never generated.

    Args:
        spec (FermionKernelSpec): Momentum grid.
        delta_tau (float): τ − τ′.

    Returns:
        List of `KernelTerm` in grid order.

    Raises:
        ThetaAmbiguityError: τ = τ′.
    """

    terms = []
    for weight, p in zip(spec.weights, spec.momenta()):
        theta = theta_coefficient(spec.direction, delta_tau, p.p[0])
        if not theta:
            continue
        for sign, wave in _mode_waves(p, spec.gammas):
            terms.append(KernelTerm(_prefactor(spec.direction) * weight * theta * sign, wave, wave))
    logger.trace('%s kernel terms for Δτ=%s.', len(terms), delta_tau)  # type: ignore
    return terms


def fermion_kernel(
    spec: FermionKernelSpec, event: Event, event_prime: Event, workers: bool = False
) -> SpinorMatrix:
    """Return Γ⁰±(w, w′) summed over the momentum grid.

    Args:
        spec (FermionKernelSpec): Momentum grid and direction.
        event (tuple): (x, τ).
        event_prime (tuple): (x′, τ′).
        workers (bool): (optional) Evaluate summands concurrently.

    Returns:
        4×4 matrix.

    Raises:
        ThetaAmbiguityError: τ = τ′.
    """

    terms = kernel_terms(spec, event[1] - event_prime[1])
    matrices = gather_ordered(lambda term: term.matrix(event, event_prime), terms, workers)
    return ordered_sum(matrices, np.zeros((4, 4), dtype=np.complex128))


def _overlap(basis_wave: PlaneWave, wave: PlaneWave, rho: float) -> complex:
    """Return ∫d⁴z ψ̄_basis(z, ρ) ψ_wave(z, ρ) times the cell weight.

    Nonzero only for matching wavevectors, where the integral is
    (2π)⁴·N·N′·ψ̄ψ divided by the cell weight.
    """

    scale = max(1.0, float(np.abs(wave.wavevector).max()))
    if np.abs(basis_wave.wavevector - wave.wavevector).max() > MATCH_TOLERANCE * scale:
        return 0.0
    spinors = (basis_wave.spinor.conj() @ basis_wave.gammas.gamma[0]) @ wave.spinor
    phase = np.exp(1j * (wave.frequency - basis_wave.frequency) * rho)
    return (2 * math.pi) ** 4 * basis_wave.normalization * wave.normalization * spinors * phase


def propagate(
    spec: FermionKernelSpec, wave: PlaneWave, x: FourVector, tau: float, rho: float
) -> Spinor:
    """Return (1/i)∫d⁴z Γ⁰±(x − z, τ − ρ) ψ(z, ρ) for a plane wave ψ.

    Args:
        spec (FermionKernelSpec): Momentum grid and direction.
        wave (PlaneWave): Wave at parameter ρ.
        x (FourVector): Event of evaluation.
        tau (float): Parameter of evaluation.
        rho (float): Parameter of the integration surface.

    Returns:
        Propagated spinor value.

    Raises:
        ThetaAmbiguityError: τ = ρ.
    """

    x = np.asarray(x, dtype=np.float64)
    total = np.zeros(4, dtype=np.complex128)
    for term in kernel_terms(spec, tau - rho):
        weight = abs(term.coefficient)
        overlap = _overlap(term.right, wave, rho)
        if overlap:
            # the cell weight of the sum cancels the 1/weight of the grid delta
            total = total + term.coefficient / weight * term.left(x, tau) * overlap
    return -1j * total


def internal_line(
    q: FourVector, omega: float, gammas: GammaBasis | None = None, offset: float = 0.0
) -> SpinorMatrix:
    """Return the fermion internal line (ω − slash(q))/(q·q + ω²).

    This is the inverse of ω + slash(q), the free parametrized operator on
    the mode exp(i(q·x + ωτ)).

    Args:
        q (FourVector): Virtual momentum.
        omega (float): τ-frequency carried through the line.
        gammas (GammaBasis): (optional) Representation.
        offset (float): (optional) Imaginary contour offset of the denominator.

    Returns:
        4×4 matrix.

    Raises:
        PoleError: q·q + ω² = 0 with zero offset.
    """

    denominator = dot(q, q) + omega**2 + 1j * offset
    if abs(denominator) <= MATCH_TOLERANCE * max(1.0, omega**2, abs(float(np.asarray(q)[0])) ** 2):
        raise PoleError('internal line on its pole; supply contour offset.')
    return (omega * IDENTITY - slash(q, gammas)) / denominator


def boson_numerator(k: FourVector, varpi: float) -> npt.NDArray[np.float64]:
    """Return G^{λν} = g^{λν} + k^λk^ν/ϖ².

    Raises:
        MasslessNumeratorError: ϖ = 0.
    """

    if varpi == 0:
        raise MasslessNumeratorError('massless numerator undefined; use gauge-reduced form.')
    k = np.asarray(k, dtype=np.float64)
    return METRIC + np.outer(k, k) / varpi**2


def boson_polarizations(k: FourVector, varpi: float) -> npt.NDArray[np.float64]:
    """Return the three polarizations ε_j of an on-shell massive boson.

    The rest frame unit spatial vectors are boosted along k, giving
    k·ε_j = 0, ε_i·ε_j = δ_ij and Σ_j ε_j^λ ε_j^ν = G^{λν}.

    Args:
        k (FourVector): Wavenumber with k·k = −ϖ².
        varpi (float): Nonzero boson mass.

    Returns:
        (3, 4) array, one polarization per row.
    """

    k = np.asarray(k, dtype=np.float64)
    rest = OnShellMomentum(np.sign(k[0]) * k, abs(varpi), 1)
    return boost_to(rest)[:, 1:].T.copy()


def transverse_polarizations(k: FourVector) -> npt.NDArray[np.float64]:
    """Return two real transverse polarizations of a photon.

    Args:
        k (FourVector): Null wavenumber.

    Returns:
        (2, 4) array of unit vectors (0, **e**) with **e**·**k** = 0.

    Raises:
        OffLightConeError: k is not null.
    """

    k = np.asarray(k, dtype=np.float64)
    if abs(dot(k, k)) > 1e-9 * max(1.0, k[0] ** 2) or k[0] == 0:
        raise OffLightConeError(f'{tuple(k)} is not a photon wavenumber.')
    spatial = null_space(k[None, 1:]).T
    return np.hstack([np.zeros((2, 1)), spatial])


def boson_influence(
    k: FourVector, varpi: float, offset: float = 0.0
) -> npt.NDArray[np.complex128]:
    """Return D^{λν} = G^{λν}/(k·k + ϖ²), or g^{λν}/(k·k) for ϖ = 0.

    Args:
        k (FourVector): Wavenumber.
        varpi (float): Boson mass.
        offset (float): (optional) Imaginary contour offset. Its sign selects
            the path (retarded for ϖ ≥ 0, advanced for ϖ < 0 by convention of
            the caller).

    Returns:
        4×4 complex tensor with upper indices.

    Raises:
        PoleError: on-pole input with zero offset.
    """

    k = np.asarray(k, dtype=np.float64)
    denominator = dot(k, k) + varpi**2 + 1j * offset
    if abs(denominator) <= MATCH_TOLERANCE * max(1.0, varpi**2, k[0] ** 2):
        raise PoleError('pole; supply contour offset.')
    numerator = METRIC if varpi == 0 else boson_numerator(k, varpi)
    return numerator / denominator


def conserved_contraction(
    current: Spinor, influence: npt.NDArray[np.complex128]
) -> complex:
    """Return J_λ D^{λν} J_ν for a contravariant current."""
    lowered = METRIC @ current
    return complex(lowered @ influence @ lowered)


def current_exchange(
    current: Spinor, k: FourVector, varpi: float, offset: float = 0.0
) -> complex:
    """Return J_λ D^{λν} J_ν with the gauge term taken from k·J.

    Equal to `conserved_contraction(current, boson_influence(k, varpi))`
    but written as (J·J + (k·J)²/ϖ²)/(k·k + ϖ²), which keeps full precision
    for conserved currents at small ϖ.

    Raises:
        PoleError: on-pole input with zero offset.
    """

    k = np.asarray(k, dtype=np.float64)
    denominator = dot(k, k) + varpi**2 + 1j * offset
    if abs(denominator) <= MATCH_TOLERANCE * max(1.0, varpi**2, k[0] ** 2):
        raise PoleError('pole; supply contour offset.')
    value = dot(current, current)
    if varpi:
        value = value + dot(k, current) ** 2 / varpi**2
    return complex(value / denominator)


def kernel_is_unmixed(terms: Iterable[KernelTerm]) -> bool:
    """Return True when every summand pairs f with f̄ or h with h̄ of one mode."""
    return all(
        term.left is term.right and term.left.antiparticle == (term.left.branch < 0)
        for term in terms
    )
