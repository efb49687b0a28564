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

"""Spinor basis and parametrized plane waves.

Builds the (u_p, v_p) block by boosting the rest frame unit block, the
plane waves f(±)_p of the free parametrized Dirac equation, the
antiparticle waves h(−)_p and the TPC conjugation.

    Typical usage example:

    p = OnShellMomentum.from_mass(1.0, (0.0, 0.0, 0.5))
    wave = PlaneWave(p, branch=1, spin=1)
    value = wave(x, tau)
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np
import numpy.typing as npt

from taudirac.clifford import GammaBasis, IDENTITY, Spinor, SpinorMatrix, representation
from taudirac.exceptions import EnergySignError
from taudirac.minkowski import FourVector, OnShellMomentum, dot, energy_sign, mass

CONTINUUM: float = 1 / (2 * math.pi) ** 2

Field = Callable[[FourVector, float], Spinor]


@dataclass(frozen=True, slots=True, eq=False)
class SpinorBlock:
    """Spinor block of a momentum.

    Attributes:
        u (ndarray): 4×2 block of u_p columns, spin 1 and 2.
        v (ndarray): 4×2 block of v_p columns, spin 1 and 2.
        p (FourVector): Momentum the block was built from.
        gammas (GammaBasis): Representation of the block.
    """

    u: npt.NDArray[np.complex128]
    v: npt.NDArray[np.complex128]
    p: FourVector
    gammas: GammaBasis

    @property
    def u_bar(self) -> npt.NDArray[np.complex128]:
        """2×4 block ū = u†γ⁰."""
        return self.u.conj().T @ self.gammas.gamma[0]

    @property
    def v_bar(self) -> npt.NDArray[np.complex128]:
        """2×4 block v̄ = v†γ⁰."""
        return self.v.conj().T @ self.gammas.gamma[0]


def spinor_boost(p: FourVector, gammas: GammaBasis | None = None) -> SpinorMatrix:
    """Return S(Λ) for the pure boost from rest to (|p⁰|, φ_p **p**).

    S = cosh(η/2) I₄ + sinh(η/2) γ⁰γ·n̂, written in closed form as
    ((E + m) I₄ + γ⁰γ^i q^i) / √(2m(E + m)) with q the positive energy
    representative of p.

    Args:
        p (FourVector): Subluminal momentum.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        4×4 spinor boost matrix.
    """

    gammas = gammas or representation()
    m = mass(p)
    q = energy_sign(p) * np.asarray(p, dtype=np.float64)
    energy = q[0]
    generator = sum(q[i] * gammas.gamma[0] @ gammas.gamma[i] for i in (1, 2, 3))
    return ((energy + m) * IDENTITY + generator) / math.sqrt(2 * m * (energy + m))


def build_basis(p: FourVector, gammas: GammaBasis | None = None) -> SpinorBlock:
    """Return the spinor block of p.

    The block depends on p only through its positive energy
    representative, so build_basis(p) equals build_basis(−p) exactly.

    Args:
        p (FourVector): Subluminal momentum.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        `SpinorBlock` with ūu = I₂, v̄v = −I₂, ūv = 0.

    Raises:
        NotSubluminalError: p is not subluminal.
    """

    gammas = gammas or representation()
    block = spinor_boost(p, gammas) @ gammas.rest_frame
    return SpinorBlock(block[:, :2], block[:, 2:], np.asarray(p, dtype=np.float64), gammas)


def basis_residuals(block: SpinorBlock) -> dict[str, float]:
    """Return the largest violation of each orthonormality relation of a block."""
    unit = np.eye(2)
    u_bar, v_bar = block.u_bar, block.v_bar
    return {
        'u_bar_u': float(np.abs(u_bar @ block.u - unit).max()),
        'v_bar_v': float(np.abs(v_bar @ block.v + unit).max()),
        'u_bar_v': float(max(np.abs(u_bar @ block.v).max(), np.abs(v_bar @ block.u).max())),
        'completeness': float(np.abs(block.u @ u_bar - block.v @ v_bar - IDENTITY).max()),
    }


@dataclass(frozen=True, eq=False)
class PlaneWave:
    """Parametrized plane wave.

    With branch +1 the wave is f(+)_p = u_p exp(i(p·x + φ_p m τ)), with
    branch −1 it is f(−)_p = v_p exp(i(p·x − φ_p m τ)). An antiparticle
    wave is h(−)_p = −i f(−)_{−p}. Every wave has the form
    N·spinor·exp(i(k·x + ωτ)).

    Attributes:
        momentum (OnShellMomentum): Momentum p.
        branch (int): +1 or −1.
        spin (int): Rest frame spin label, 1 (up) or 2 (down) along the 3-axis.
        normalization (float): 1/(2π)² or the box value 1/L².
        antiparticle (bool): Wave is h(−)_p.
        gammas (GammaBasis): Representation.
    """

    momentum: OnShellMomentum
    branch: int = 1
    spin: int = 1
    normalization: float = CONTINUUM
    antiparticle: bool = False
    gammas: GammaBasis = field(default_factory=representation)

    def __post_init__(self) -> None:
        if self.branch not in (1, -1) or self.spin not in (1, 2):
            raise ValueError(f'invalid branch {self.branch} or spin {self.spin}.')
        if self.antiparticle and self.branch != -1:
            raise ValueError('antiparticle waves belong to the (−) branch.')

    @cached_property
    def block(self) -> SpinorBlock:
        """Spinor block of the momentum."""
        return build_basis(self.momentum.p, self.gammas)

    @cached_property
    def spinor(self) -> Spinor:
        """Constant spinor factor."""
        column = self.spin - 1
        if self.antiparticle:
            return -1j * self.block.v[:, column]
        if self.branch > 0:
            return self.block.u[:, column]
        return self.block.v[:, column]

    @property
    def wavevector(self) -> FourVector:
        """Space-time wavevector k of the phase."""
        return -self.momentum.p if self.antiparticle else self.momentum.p

    @property
    def frequency(self) -> float:
        """τ-frequency ω of the phase."""
        if self.antiparticle:
            return self.momentum.phi * self.momentum.m
        return self.branch * self.momentum.phi * self.momentum.m

    def phase(self, x: FourVector, tau: float) -> float:
        """Return χ = k·x + ωτ."""
        return dot(self.wavevector, x) + self.frequency * tau

    def __call__(self, x: FourVector, tau: float) -> Spinor:
        return self.normalization * self.spinor * np.exp(1j * self.phase(x, tau))

    def bar(self, x: FourVector, tau: float) -> Spinor:
        """Return the Dirac adjoint of the wave value."""
        return self(x, tau).conj() @ self.gammas.gamma[0]


def evaluate_wave(w: PlaneWave, x: FourVector, tau: float) -> Spinor:
    """Return the value of a plane wave at event x and parameter τ."""
    return w(np.asarray(x, dtype=np.float64), tau)


def antiparticle_wave(
    p: OnShellMomentum,
    spin: int = 1,
    normalization: float = CONTINUUM,
    gammas: GammaBasis | None = None,
) -> PlaneWave:
    """Return h(−)_p = −iγ⁵ f(+)_p(−x, τ) = −i f(−)_{−p}(x, τ).

    Args:
        p (OnShellMomentum): Positive energy momentum of the antiparticle.
        spin (int): (optional) Spin label.
        normalization (float): (optional) Wave normalization.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        `PlaneWave` with `antiparticle` set.

    Raises:
        EnergySignError: p⁰ ≤ 0.
    """

    if p.phi < 0:
        raise EnergySignError('antiparticle waves need a positive energy momentum.')
    return PlaneWave(p, -1, spin, normalization, True, gammas or representation())


def tpc_conjugate(psi: Field, gammas: GammaBasis | None = None) -> Field:
    """Return the TPC conjugate field x ↦ −iγ⁵ ψ(−x, τ).

    Args:
        psi (Callable): Spinor field of (x, τ).
        gammas (GammaBasis): (optional) Representation.

    Returns:
        Conjugated field; conjugating twice gives −ψ.
    """

    g5 = (gammas or representation()).gamma5

    def conjugated(x: FourVector, tau: float) -> Spinor:
        return -1j * g5 @ psi(-np.asarray(x, dtype=np.float64), tau)

    return conjugated


def free_residual(
    psi: Field,
    x: FourVector,
    tau: float,
    step: float = 1e-4,
    gammas: GammaBasis | None = None,
) -> Spinor:
    """Return (1/i)∂_τψ + γ^μ(1/i)∂_μψ at (x, τ) by central differences.

    Args:
        psi (Callable): Spinor field of (x, τ).
        x (FourVector): Event.
        tau (float): Parameter value.
        step (float): (optional) Difference step.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        Residual spinor, zero for free solutions.
    """

    gammas = gammas or representation()
    x = np.asarray(x, dtype=np.float64)
    residual = (psi(x, tau + step) - psi(x, tau - step)) / (2 * step)
    for mu in range(4):
        shift = np.zeros(4)
        shift[mu] = step
        residual = residual + gammas.gamma[mu] @ (psi(x + shift, tau) - psi(x - shift, tau)) / (2 * step)
    return -1j * residual


def phase_velocity(p: OnShellMomentum, branch: int) -> float:
    """Return dx⁰/dτ on a constant phase surface of f(±)_p, which is ±m/E."""
    return branch * p.phi * p.m / p.p[0]


def vector_bilinears(block: SpinorBlock) -> dict[str, npt.NDArray[np.complex128]]:
    """Return ū_s γ^μ u_r and v̄_s γ^μ u_r as (4, 2, 2) arrays indexed [μ, s, r]."""
    gamma = block.gammas.gamma
    return {
        'u_u': np.einsum('si,mij,jr->msr', block.u_bar, gamma, block.u),
        'v_u': np.einsum('si,mij,jr->msr', block.v_bar, gamma, block.u),
    }
