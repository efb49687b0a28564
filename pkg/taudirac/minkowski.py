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

"""Minkowski space kinematics.

Metric g = diag(−1, +1, +1, +1), natural units c = ħ = 1. Four-vectors
are plain real numpy arrays of shape (4,) holding contravariant
components (x⁰, x¹, x², x³).

    Typical usage example:

    from taudirac.minkowski import OnShellMomentum, boost_to
    p = OnShellMomentum.from_mass(0.511, (0.0, 0.0, 1.0))
    transform = boost_to(p)
"""

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np
import numpy.typing as npt

from taudirac.exceptions import EnergySignError, NotSubluminalError

FourVector = npt.NDArray[np.float64]
LorentzTransform = npt.NDArray[np.float64]

METRIC: npt.NDArray[np.float64] = np.diag([-1.0, 1.0, 1.0, 1.0])
ON_SHELL_TOLERANCE: float = 1e-12


def four_vector(components: Iterable[float]) -> FourVector:
    """Return a validated real four-vector.

    Args:
        components (Iterable): Four contravariant components.

    Returns:
        Array of shape (4,).
    """

    vector = np.asarray(components, dtype=np.float64)
    if vector.shape != (4,):
        raise ValueError(f'four-vector needs 4 components, got shape {vector.shape}.')
    return vector


def lower(a: FourVector) -> FourVector:
    """Return covariant components a_μ = g_μν a^ν."""
    return METRIC @ np.asarray(a)


def dot(a: FourVector, b: FourVector) -> float:
    """Return the Minkowski product −a⁰b⁰ + a¹b¹ + a²b² + a³b³."""
    a = np.asarray(a)
    b = np.asarray(b)
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]


def mass(p: FourVector) -> float:
    """Return the mass √(−p·p) of a subluminal four-vector.

    Args:
        p (FourVector): Four-momentum.

    Returns:
        Positive mass.

    Raises:
        NotSubluminalError: p·p ≥ 0.
    """

    square = -dot(p, p)
    if not square > 0:
        raise NotSubluminalError(f'{tuple(np.asarray(p))} is not subluminal (p·p = {-square}).')
    return math.sqrt(square)


def energy_sign(p: FourVector) -> int:
    """Return φ_p = sgn(p⁰).

    Raises:
        EnergySignError: p⁰ = 0.
    """

    if p[0] > 0:
        return 1
    if p[0] < 0:
        return -1
    raise EnergySignError('energy sign of a four-vector with p⁰ = 0 is undefined.')


@dataclass(frozen=True, slots=True, eq=False)
class OnShellMomentum:
    """On-shell four-momentum.

    Attributes:
        p (FourVector): Contravariant components.
        m (float): Positive mass with −p·p = m².
        phi (int): Energy sign φ_p of p⁰.
    """

    p: FourVector
    m: float
    phi: int

    def __post_init__(self) -> None:
        if not self.m > 0:
            raise NotSubluminalError(f'mass must be positive, got {self.m}.')
        if self.phi != energy_sign(self.p):
            raise EnergySignError(f'phi={self.phi} does not match p⁰={self.p[0]}.')
        scale = max(self.m**2, float(self.p[0]) ** 2)
        if abs(-dot(self.p, self.p) - self.m**2) > ON_SHELL_TOLERANCE * scale:
            raise NotSubluminalError(f'{tuple(self.p)} is off the m={self.m} mass shell.')

    @classmethod
    def of(cls, p: Iterable[float]) -> 'OnShellMomentum':
        """Return the on-shell momentum whose mass is read off p."""
        vector = four_vector(p)
        return cls(vector, mass(vector), energy_sign(vector))

    @classmethod
    def from_mass(cls, m: float, three: Iterable[float], phi: int = 1) -> 'OnShellMomentum':
        """Return the momentum of mass m, spatial part `three` and energy sign phi."""
        spatial = np.asarray(three, dtype=np.float64)
        energy = math.sqrt(m**2 + float(spatial @ spatial))
        return cls(np.concatenate(([phi * energy], spatial)), m, phi)

    @property
    def energy(self) -> float:
        """E_p = |p⁰|."""
        return abs(float(self.p[0]))

    @property
    def three(self) -> npt.NDArray[np.float64]:
        """Spatial part **p**."""
        return self.p[1:]

    def reflected(self) -> 'OnShellMomentum':
        """Return the momentum −p."""
        return OnShellMomentum(-self.p, self.m, -self.phi)


def boost_to(p: OnShellMomentum) -> LorentzTransform:
    """Return the pure boost taking (m, 0, 0, 0) to p.

    Args:
        p (OnShellMomentum): Positive energy momentum.

    Returns:
        Λ with Λ^μ_ν as a (4, 4) array.

    Raises:
        EnergySignError: p⁰ ≤ 0.
    """

    if p.phi < 0:
        raise EnergySignError('boost_to needs a positive energy momentum.')

    beta = p.three / p.energy
    b2 = float(beta @ beta)
    gamma = p.energy / p.m
    transform = np.eye(4)
    if b2 == 0.0:
        return transform
    transform[0, 0] = gamma
    transform[0, 1:] = gamma * beta
    transform[1:, 0] = gamma * beta
    transform[1:, 1:] += (gamma - 1.0) * np.outer(beta, beta) / b2
    return transform


def sample_momenta(
    rng: np.random.Generator,
    count: int,
    masses: tuple[float, float] = (0.1, 3.0),
    spread: float = 3.0,
    signs: bool = True,
) -> list[OnShellMomentum]:
    """Draw random on-shell momenta.

    Args:
        rng (Generator): Seeded generator.
        count (int): Number of momenta.
        masses (tuple): (optional) Uniform mass range.
        spread (float): (optional) Standard deviation of each spatial component.
        signs (bool): (optional) Draw random energy signs, otherwise all positive.

    Returns:
        List of momenta.
    """

    result = []
    for _ in range(count):
        m = rng.uniform(*masses)
        three = rng.normal(scale=spread, size=3)
        phi = int(rng.choice((-1, 1))) if signs else 1
        result.append(OnShellMomentum.from_mass(m, three, phi))
    return result


def commutator_residual(
    p: FourVector, x: FourVector, step: float = 1e-5
) -> float:
    """Return the largest deviation of [x^μ, p^ν] from i g^{μν}.

    The momentum operator p^ν = (1/i)∂^ν acts on the mode exp(i p·x)
    through central differences at the event x.

    Args:
        p (FourVector): Mode wavevector.
        x (FourVector): Event of evaluation.
        step (float): (optional) Difference step.

    Returns:
        max over μ, ν of |([x^μ, p^ν] − i g^{μν}) ψ(x)|.
    """

    p = four_vector(p)
    x = four_vector(x)

    def mode(event: FourVector) -> complex:
        return complex(np.exp(1j * dot(p, event)))

    def momentum(func: Callable[[FourVector], complex], nu: int) -> complex:
        shift = np.zeros(4)
        shift[nu] = step
        derivative = (func(x + shift) - func(x - shift)) / (2 * step)
        return -1j * METRIC[nu, nu] * derivative

    worst = 0.0
    for mu in range(4):
        def weighted(event: FourVector, mu: int = mu) -> complex:
            return event[mu] * mode(event)

        for nu in range(4):
            commutator = x[mu] * momentum(mode, nu) - momentum(weighted, nu)
            worst = max(worst, abs(commutator - 1j * METRIC[mu, nu] * mode(x)))
    return worst
